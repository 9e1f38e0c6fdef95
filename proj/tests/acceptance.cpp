// One PASS/FAIL line per acceptance criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fcover/fcover.hpp"
#include "support/corpus.hpp"
#include "support/random.hpp"
#include "support/super.hpp"

using namespace fcover;
using fcover::testing::Gen;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

// Bases computed along the way, checked again in criterion 5.
struct Computed {
  IdealPresentation ideal;
  GroebnerBasis gb;
};
std::vector<Computed> computed;

GroebnerBasis remember(const IdealPresentation& ideal) {
  auto gb = buchberger(ideal);
  computed.push_back({ideal, gb});
  return gb;
}

Outcome family1_reproduction() {
  Outcome o;
  VariableSet v(3);
  auto P = [&](const char* s) { return parse_poly(s, v); };
  std::vector<Polynomial> rho{P("1"), P("t3"), P("0")};
  auto j = family1(v, rho);
  auto rad = family1_radical(v, rho);
  auto gb = remember(j);
  remember(rad);

  o.require(ideal_poisson_stable(j).stable, "J is not Poisson stable");
  for (std::size_t i = 2; i <= 3; ++i) {
    auto g = P(i == 2 ? "y2 - t3" : "y3");
    o.require(radical_contains(g, j), "y" + std::to_string(i) + " - rho" + std::to_string(i) + " not in sqrt(J)");
    o.require(!ideal_contains(g, gb), "y" + std::to_string(i) + " - rho" + std::to_string(i) + " lies in J");
  }
  o.require(verify_stated_radical(j, rad).certified(), "stated radical not certified");
  o.require(ideal_equals(j.extended(rad.generators()), rad), "J + R != R");
  auto st = ideal_poisson_stable(rad);
  o.require(!st.stable && st.witness, "sqrt(J) reported stable");
  if (st.witness) {
    o.require(st.witness->bracket.is_constant() && !st.witness->bracket.is_zero(), "witness bracket is not a nonzero constant");
    o.note = "witness " + st.witness->to_string();
  }
  return o;
}

std::vector<std::size_t> model_power_dimensions(std::size_t n) {
  // C[x2, x3]/(x2^2, x2 x3, x3^(n-1)): N = (x2, x3, ..., x3^(n-2)), N^k = (x3^k, ..., x3^(n-2)) for k >= 2
  std::vector<std::size_t> dims{n - 1};
  for (std::size_t k = 2; dims.back() != 0; ++k) dims.push_back(k <= n - 2 ? n - 1 - k : 0);
  return dims;
}

Outcome family2_reproduction() {
  Outcome o;
  std::string notes;
  for (std::size_t n : {3u, 4u}) {
    VariableSet v(n);
    auto j = family2(v);
    auto rad = family2_radical(v);
    remember(j);
    auto rgb = remember(rad);
    auto tag = "n=" + std::to_string(n) + ": ";

    o.require(ideal_poisson_stable(j).stable, tag + "J is not Poisson stable");
    o.require(verify_stated_radical(j, rad).certified(), tag + "stated radical not certified");
    o.require(ideal_equals(j.extended(rad.generators()), rad), tag + "J + R != R");
    auto st = ideal_poisson_stable(rad);
    o.require(!st.stable && st.witness, tag + "sqrt(J) reported stable");
    auto y1 = Polynomial::variable(v, v.y(1));
    if (st.witness) {
      o.require(st.witness->bracket == y1, tag + "witness bracket is " + st.witness->bracket.to_string());
      notes += (notes.empty() ? "" : "; ") + tag + st.witness->to_string();
    }
    o.require(!ideal_contains(y1, rgb) && !radical_contains(y1, j), tag + "y1 lies in sqrt(J)");

    auto expected = model_power_dimensions(n);
    for (const auto& t0 : default_sample_points(n)) {
      auto a = fiber_algebra(j, t0, n);
      auto nr = nilradical(a);
      o.require(a.dim() == n, tag + "fiber dimension at " + point_to_string(t0));
      o.require(nr.basis.size() == n - 1, tag + "nilradical dimension at " + point_to_string(t0));
      o.require(nr.power_dimensions == expected, tag + "nilradical powers at " + point_to_string(t0));
    }
  }
  if (o.ok) o.note = notes;
  return o;
}

Outcome theorem_equivalence() {
  Outcome o;
  auto corpus = fcover::testing::theorem_corpus();
  std::size_t pos = 0, neg = 0;
  for (const auto& inst : corpus) {
    bool id = is_f_manifold(inst.m, Route::identity).f_manifold;
    bool sp = is_f_manifold(inst.m, Route::spectral).f_manifold;
    remember(spectral_cover_ideal(inst.m));
    o.require(id == sp, "routes disagree on " + inst.label);
    if (inst.expected) o.require(id == *inst.expected, "wrong verdict on " + inst.label);
    (id ? pos : neg)++;
  }
  o.require(corpus.size() >= 50, "corpus has fewer than 50 instances");
  o.require(pos >= 10 && neg >= 10, "corpus is unbalanced");
  if (o.ok)
    o.note = std::to_string(corpus.size()) + " instances, " + std::to_string(pos) + " F-manifolds, " +
             std::to_string(neg) + " not";
  return o;
}

Outcome poisson_laws() {
  Outcome o;
  Gen gen(4);
  for (std::size_t n : {2u, 3u})
    for (int k = 0; k < 100; ++k) {
      VariableSet v(n);
      auto f = gen.ty_poly(v), g = gen.ty_poly(v), h = gen.ty_poly(v);
      o.require(poisson_bracket(f, g) == -poisson_bracket(g, f), "antisymmetry");
      o.require(poisson_tensor(f, g, h).is_zero(), "Leibniz");
      auto jac = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                 poisson_bracket(h, poisson_bracket(f, g));
      o.require(jac.is_zero(), "Jacobi");
      auto x = gen.field(v), y = gen.field(v);
      o.require(poisson_bracket(x.symbol(), y.symbol()) == lie_bracket(x, y).symbol(), "symbol compatibility");
    }
  if (o.ok) o.note = "200 triples, 200 field pairs";
  return o;
}

Outcome groebner_consistency() {
  Outcome o;
  Gen gen(5);
  std::size_t pairs = 0;
  for (const auto& c : computed) {
    const auto& b = c.gb.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t k = i + 1; k < b.size(); ++k) {
        o.require(reduce(s_polynomial(b[i], b[k], c.gb.order()), b, c.gb.order()).is_zero(), "S-polynomial does not reduce to 0");
        ++pairs;
      }
  }
  for (int k = 0; k < 100; ++k) {
    const auto& c = computed[k % computed.size()];
    const auto& v = c.ideal.vars();
    Polynomial sum(v);
    for (const auto& g : c.ideal.generators()) sum += gen.ty_poly(v, 2, 3) * g;
    o.require(ideal_contains(sum, c.gb), "combination of generators not in the ideal");
    auto f = gen.ty_poly(v, 3, 5);
    auto nf = normal_form(f, c.gb);
    o.require(normal_form(nf, c.gb) == nf, "normal form not idempotent");
  }
  if (o.ok)
    o.note = std::to_string(computed.size()) + " bases, " + std::to_string(pairs) + " S-pairs, 100 combinations";
  return o;
}

Outcome euler_fields_commute() {
  Outcome o;
  Gen gen(6);
  std::size_t tate = 0;
  for (int k = 0; k < 40; ++k) {
    // Hodge-symmetric data with the unit class (0,0)
    std::vector<Bidegree> bd{{0, 0}};
    Vector r{0};
    std::size_t extra = gen.below(4);
    for (std::size_t i = 0; i < extra; ++i) {
      unsigned p = static_cast<unsigned>(gen.below(4)), q = gen.coin() ? p : static_cast<unsigned>(gen.below(4));
      bd.push_back({p, q});
      r.push_back(p == 1 && q == 1 ? gen.small_rational() : Rational(0));
      if (p != q) {
        bd.push_back({q, p});
        r.push_back(0);
      }
    }
    GradingData gr(bd, r);
    auto an = euler_fields(gr);
    o.require(an.commutator.is_zero(), "[E1, E2] != 0");
    bool some_off_diagonal = std::any_of(bd.begin(), bd.end(), [](const Bidegree& b) { return b.p != b.q; });
    o.require(an.proportional == !some_off_diagonal, "proportionality verdict");
    tate += !some_off_diagonal;
  }
  if (o.ok) o.note = "40 gradings, " + std::to_string(tate) + " Hodge-Tate";
  return o;
}

Outcome odd_witness() {
  Outcome o;
  auto ext = exterior_algebra(2);
  for (const Vector& delta : {Vector{0, 1, 0, 0}, Vector{0, 0, 1, 0}, Vector{0, 1, 1, 0}}) {
    auto w = odd_nilpotent_witness(ext, delta);
    o.require(ext.pair(w.n, ext.unit()) == 1, "g(N, e) != 1");
    o.require(is_zero(ext.multiply(w.n, w.n)) && !is_zero(w.n), "N o N != 0");
  }
  Gen gen(7);
  std::size_t valid = 0;
  for (int k = 0; k < 200; ++k) {
    auto a = k % 2 ? fcover::testing::random_super(gen) : fcover::testing::random_exterior(gen);
    if (!a) continue;
    ++valid;
    o.require(a->dim() <= 6, "dimension above 6");
    for (std::size_t b = 0; b < a->dim(); ++b)
      if (a->parity()[b] == Parity::odd) {
        auto d = a->basis_vector(b);
        o.require(is_zero(a->multiply(d, d)), "odd basis element with nonzero square");
      }
  }
  if (o.ok) o.note = std::to_string(valid) + " valid random algebras";
  return o;
}

Outcome semisimplicity() {
  Outcome o;
  for (long q = -5; q <= 5; ++q) {
    PointAlgebra a(2, {{1, 0}, {0, 1}, {0, 1}, {q, 0}}, {1, 0});
    o.require(determinant(trace_form(a)) == 4 * q, "det trace form != 4q at q=" + std::to_string(q));
    o.require(is_semisimple(a) == (q != 0), "semisimplicity verdict at q=" + std::to_string(q));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    VariableSet v(n);
    std::vector<VectorField> prod;
    auto e = VectorField::zero(v);
    for (std::size_t a = 1; a <= n; ++a) {
      e += VectorField::coordinate(v, a);
      for (std::size_t b = 1; b <= n; ++b)
        prod.push_back(a == b ? VectorField::coordinate(v, a) : VectorField::zero(v));
    }
    FMultiplication m(v, prod, e);
    auto alg = fiber_algebra(m, default_sample_points(n, 1).front());
    auto rep = orthogonal_idempotents(alg);
    o.require(rep.idempotents && rep.idempotents->size() == n, "expected " + std::to_string(n) + " idempotents");
    if (!rep.idempotents) continue;
    auto got = *rep.idempotents;
    std::vector<Vector> basis;
    for (std::size_t a = 0; a < n; ++a) basis.push_back(alg.basis_vector(a));
    std::sort(got.begin(), got.end());
    std::sort(basis.begin(), basis.end());
    o.require(got == basis, "idempotents are not the coordinate fields at n=" + std::to_string(n));
  }
  if (o.ok) o.note = "q in [-5, 5], constant models n = 1..4";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "family 1 reproduction", 5, family1_reproduction},
      {2, "family 2 reproduction", 30, family2_reproduction},
      {3, "structure identity vs spectral cover", 300, theorem_equivalence},
      {4, "Poisson algebra laws", 0, poisson_laws},
      {5, "Groebner self-consistency", 0, groebner_consistency},
      {6, "Euler fields", 0, euler_fields_commute},
      {7, "odd nilpotent witness", 0, odd_witness},
      {8, "semisimplicity criterion", 0, semisimplicity},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.ok = false;
      o.note = "exceeded " + std::to_string(static_cast<int>(c.limit)) + " s";
    }
    all = all && o.ok;
    std::printf("criterion %d (%s): %s [%.2f s] %s\n", c.id, c.name.c_str(), o.ok ? "PASS" : "FAIL", secs,
                o.note.c_str());
  }
  return all ? 0 : 1;
}
