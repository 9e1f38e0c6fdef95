#include <gtest/gtest.h>

#include "fcover/fcover.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace fcover;
using fcover::testing::Gen;

namespace {

VariableSet v3(3);
Polynomial P(const char* s, const VariableSet& v = v3) { return parse_poly(s, v); }
Polynomial var(std::size_t idx, const VariableSet& v = v3) { return Polynomial::variable(v, idx); }

}  // namespace

TEST(Rational, LowestTermsAndSign) {
  auto r = make_rational(6, -4);
  EXPECT_EQ(r.get_str(), "-3/2");
  EXPECT_TRUE(is_lowest_terms(r));
  EXPECT_EQ(make_rational(0, 7).get_str(), "0");
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_EQ(parse_rational("-12/8"), make_rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("x"), std::exception);
}

TEST(VariableSet, Layout) {
  EXPECT_EQ(v3.size(), 7u);
  EXPECT_EQ(v3.t(1), 0u);
  EXPECT_EQ(v3.y(1), 3u);
  EXPECT_EQ(v3.z(), 6u);
  EXPECT_EQ(v3.name(v3.y(2)), "y2");
  EXPECT_EQ(v3.find("t3"), v3.t(3));
  EXPECT_FALSE(v3.find("t4"));
  EXPECT_FALSE(v3.find("y0"));
  EXPECT_THROW(VariableSet(0), std::invalid_argument);
}

TEST(MonomialOrder, DegrevlexLexBlock) {
  auto m = [&](const char* s) { return P(s).leading_monomial(); };
  MonomialOrder drl(OrderKind::degrevlex), lex(OrderKind::lex), blk(OrderKind::block);
  // total degree first in degrevlex
  EXPECT_GT(drl.compare(m("t1^2"), m("y1")), 0);
  // lex: y variables are most significant
  EXPECT_GT(lex.compare(m("y3"), m("t1^5")), 0);
  // block: any y beats pure t, then degrevlex inside
  EXPECT_GT(blk.compare(m("y3"), m("t1^5")), 0);
  EXPECT_GT(blk.compare(m("t3*y1"), m("y2")), 0);
  EXPECT_GT(blk.compare(m("y1^2"), m("y1*y2")), 0);
  // z is least significant everywhere
  for (auto o : {drl, lex, blk}) EXPECT_GT(o.compare(m("t3"), m("z")), 0);
  EXPECT_EQ(drl.compare(m("y1*t2"), m("t2*y1")), 0);
}

TEST(Parse, SpecExamples) {
  auto p = P("y1 - 1");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p, var(v3.y(1)) - Polynomial::constant(v3, 1));

  // oracle: the square, evaluated pointwise
  auto sq = P("(y2 - t3)*(y2 - t3)");
  EXPECT_EQ(sq.to_string(), "y2^2 - 2*t3*y2 + t3^2");
  EXPECT_TRUE(fcover::testing::agrees_everywhere(v3, sq, [&](const std::vector<Rational>& x) -> Rational {
    Rational d = x[v3.y(2)] - x[v3.t(3)];
    return d * d;
  }));

  auto single = P("3/2*t1^2*y3");
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.leading_coefficient(), make_rational(3, 2));
  EXPECT_EQ(single.to_string(), "3/2*t1^2*y3");
}

TEST(Parse, Grammar) {
  EXPECT_EQ(P("-y1^2"), -(var(v3.y(1)) * var(v3.y(1))));
  EXPECT_EQ(P("2^3"), Polynomial::constant(v3, 8));
  EXPECT_EQ(P("(t1)^0"), Polynomial::constant(v3, 1));
  EXPECT_EQ(P(" +t1 -  - t2 "), var(v3.t(1)) + var(v3.t(2)));
  EXPECT_EQ(P("6/4"), Polynomial::constant(v3, make_rational(3, 2)));
  EXPECT_TRUE(P("t1 - t1").is_zero());
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("z*y1").to_string(), "y1*z");
  auto fields = parse_poly("t2*e1 + e3", v3, ParseOptions{true, {}});
  EXPECT_EQ(fields, P("t2*y1 + y3"));
}

TEST(Parse, Errors) {
  auto position = [](const char* s, ParseOptions o = {}) -> std::optional<std::size_t> {
    try {
      parse_poly(s, v3, o);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::nullopt;
  };
  EXPECT_EQ(position("y1 + * 2"), 5u);
  EXPECT_EQ(position("t4"), 0u);
  EXPECT_EQ(position("1 + w"), 4u);
  EXPECT_EQ(position("y1^-2"), 3u);
  EXPECT_EQ(position("(y1"), 3u);
  EXPECT_EQ(position("y1 y2"), 3u);
  EXPECT_EQ(position("3/0"), 0u);
  EXPECT_EQ(position("y1^2^3"), 4u);
  EXPECT_EQ(position(""), 0u);
  EXPECT_EQ(position("y1", ParseOptions{true, {}}), 0u);
  try {
    parse_poly("y1^-2", v3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("negative exponent"), std::string::npos);
  }
  try {
    parse_poly("t9 + 1", v3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown variable 't9'"), std::string::npos);
  }
}

TEST(Arith, SpecExamples) {
  EXPECT_EQ(P("y1 - 1") + P("1"), P("y1"));
  EXPECT_EQ(P("y2 - t3") * P("y3"), P("y2*y3 - t3*y3"));
  EXPECT_EQ(P("y1 - 1") * P("y1 + 1"), P("y1^2 - 1"));
  EXPECT_EQ((P("y1 - 1") * P("y1 + 1")).to_string(), "y1^2 - 1");
}

TEST(Arith, MismatchedVariableSets) {
  VariableSet v2(2);
  EXPECT_THROW(P("y1") + parse_poly("y1", v2), DimensionMismatch);
  EXPECT_THROW(P("y1") * parse_poly("y1", v2), DimensionMismatch);
  EXPECT_THROW(P("y1") - parse_poly("y1", v2), DimensionMismatch);
}

TEST(Derivative, SpecExamples) {
  EXPECT_EQ(partial_derivative(P("y2 - t3*y1"), v3.t(3)), P("-y1"));
  VariableSet v4(4);
  EXPECT_EQ(partial_derivative(parse_poly("y3^3", v4), v4.y(3)), parse_poly("3*y3^2", v4));
  EXPECT_EQ(partial_derivative(P("t2*y1"), v3.y(1)), P("t2"));
  EXPECT_THROW(partial_derivative(P("t1"), 7), std::out_of_range);
}

TEST(EvaluateBase, SpecExamples) {
  std::vector<Rational> t{0, 0, 5};
  EXPECT_EQ(evaluate_base(P("y2 - t3*y1"), t), P("y2 - 5*y1"));
  EXPECT_EQ(evaluate_base(P("t1^2 + y1"), std::vector<Rational>{2, 0, 0}), P("4 + y1"));
  EXPECT_EQ(evaluate_base(P("7"), t), P("7"));
  EXPECT_THROW(evaluate_base(P("t1"), std::vector<Rational>{1, 2}), DimensionMismatch);
}

TEST(Printing, Canonical) {
  EXPECT_EQ(P("t3^2 + y2^2 - 2*y2*t3").to_string(), "y2^2 - 2*t3*y2 + t3^2");
  EXPECT_EQ(P("-1/2*y1 + 3").to_string(), "-1/2*y1 + 3");
  EXPECT_EQ(P("y1 - t3*y1").with_order(OrderKind::block).to_string(), "-t3*y1 + y1");
  EXPECT_EQ(P("y2 + t3*y1").with_order(OrderKind::lex).to_string(), "t3*y1 + y2");
  EXPECT_EQ(P("t1 + y2").with_order(OrderKind::block).to_string(), "y2 + t1");
}

// ---------------------------------------------------------------------------------------
// Properties

TEST(PolyProperties, RingAxioms) {
  Gen gen(11);
  for (int k = 0; k < 150; ++k) {
    auto a = gen.ty_poly(v3), b = gen.ty_poly(v3), c = gen.ty_poly(v3);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyProperties, ProductMatchesPointwiseOracle) {
  Gen gen(12);
  for (int k = 0; k < 60; ++k) {
    auto a = gen.ty_poly(v3), b = gen.ty_poly(v3);
    auto prod = a * b;
    EXPECT_TRUE(fcover::testing::agrees_everywhere(
        v3, prod, [&](const std::vector<Rational>& x) -> Rational { return fcover::testing::eval_all(a, x) * fcover::testing::eval_all(b, x); },
        k, 8));
  }
}

TEST(PolyProperties, LeibnizRuleForDerivatives) {
  Gen gen(13);
  for (int k = 0; k < 150; ++k) {
    auto f = gen.ty_poly(v3), g = gen.ty_poly(v3);
    std::size_t v = gen.below(2 * v3.dim());
    EXPECT_EQ(partial_derivative(f * g, v), partial_derivative(f, v) * g + f * partial_derivative(g, v));
  }
}

TEST(PolyProperties, PrintParseRoundTrip) {
  Gen gen(14);
  for (int k = 0; k < 200; ++k) {
    auto p = gen.ty_poly(v3, 4, 6);
    EXPECT_EQ(parse_poly(p.to_string(), v3), p) << p.to_string();
    auto b = p.with_order(OrderKind::block);
    EXPECT_EQ(parse_poly(b.to_string(), v3), p);
  }
}

TEST(PolyProperties, CoefficientsStayInLowestTerms) {
  Gen gen(15);
  auto acc = gen.ty_poly(v3);
  for (int k = 0; k < 60; ++k) {
    auto g = gen.ty_poly(v3, 2, 3);
    switch (gen.below(3)) {
      case 0: acc += g; break;
      case 1: acc -= g; break;
      default: acc = acc * g + Polynomial::constant(v3, gen.small_rational()); break;
    }
    if (acc.size() > 40) acc = gen.ty_poly(v3);
    for (const auto& [m, c] : acc.terms()) {
      EXPECT_TRUE(is_lowest_terms(c));
      EXPECT_NE(c, 0);
    }
  }
}
