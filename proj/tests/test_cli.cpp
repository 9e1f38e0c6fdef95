#include <gtest/gtest.h>

#include <string>

#include "fcover/cli/commands.hpp"

using namespace fcover;
using namespace fcover::cli;

namespace {

const std::string specs = FCOVER_SPECS_DIR;

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

const Entry* find(const Report& r, const std::string& name) {
  for (const auto& e : r.entries)
    if (e.name.rfind(name, 0) == 0) return &e;
  return nullptr;
}

const char* family1_spec = R"json({
  "n": 3, "mode": "ideal",
  "ideal": ["y1 - 1", "(y2 - t3)^2", "(y2 - t3)*y3", "y3^2"],
  "radical": ["y1 - 1", "y2 - t3", "y3"]
})json";

}  // namespace

TEST(SpecReading, StructureConstants) {
  auto s = read_spec_file(specs + "/family1_multiplication.json");
  EXPECT_EQ(s.mode, Mode::structure_constants);
  EXPECT_EQ(s.n, 3u);
  auto m = build_multiplication(s);
  EXPECT_EQ(m.product(1, 1).to_string(), "-t3^2*e1 + 2*t3*e2");
  EXPECT_TRUE(m.identity_is_first_coordinate());
}

TEST(SpecReading, SymmetricFillAndIdentityExpression) {
  auto s = read_spec_text(R"json({"n": 2, "mode": "structure_constants", "identity": "e1 + e2",
    "structure_constants": {"(1,1)": "e1", "(2,1)": "0", "(2,2)": "e2"}})json");
  auto m = build_multiplication(s);
  EXPECT_TRUE(m.product(0, 1).is_zero());
  EXPECT_FALSE(m.identity_is_first_coordinate());
}

TEST(SpecReading, Errors) {
  auto bad = [](const char* text) { EXPECT_THROW(read_spec_text(text), SpecError) << text; };
  bad("[1, 2]");
  bad("{not json");
  bad(R"json({"n": 2, "mode": "ideal", "ideal": ["y1 - 1"], "colour": 1})json");
  bad(R"json({"n": 2, "mode": "ideals", "ideal": ["y1 - 1"]})json");
  bad(R"json({"mode": "ideal", "ideal": ["y1 - 1"]})json");
  bad(R"json({"n": 0, "mode": "ideal", "ideal": ["y1 - 1"]})json");
  bad(R"json({"n": 2, "mode": "ideal", "ideal": []})json");
  bad(R"json({"n": 2, "mode": "structure_constants", "structure_constants": {"(1,1)": "e1", "(2,2)": "e2"}})json");
  bad(R"json({"n": 2, "mode": "structure_constants", "structure_constants": {"(1,1)": "e1", "(1,2)": "e2", "(2,2)": "0", "(1,3)": "0"}})json");
  bad(R"json({"n": 2, "mode": "ideal", "ideal": ["y1 - 1"], "seed": -1})json");
  bad(R"json({"n": 2, "mode": "ideal", "ideal": ["y1 - 1"], "sample_points": [[1]]})json");
  bad(R"json({"gradings": []})json");
  bad(R"json({"description": "nothing"})json");
}

TEST(SpecReading, ExpressionErrorsNameTheField) {
  auto s = read_spec_text(R"json({"n": 2, "mode": "ideal", "ideal": ["y1 - 1", "y2^2 - x"]})json");
  try {
    build_ideal(s.ideal, s.n, "ideal");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_TRUE(has(e.what(), "ideal[1]")) << e.what();
    EXPECT_TRUE(has(e.what(), "unknown variable 'x'")) << e.what();
  }
  auto z = read_spec_text(R"json({"n": 2, "mode": "ideal", "ideal": ["y1 - z"]})json");
  EXPECT_THROW(build_ideal(z.ideal, z.n, "ideal"), SpecError);
}

TEST(CheckCommand, Family1) {
  auto r = cmd_check(read_spec_text(family1_spec), "family1");
  EXPECT_EQ(r.exit_code, exit_ok);
  ASSERT_TRUE(find(r, "J stability"));
  EXPECT_EQ(find(r, "J stability")->status, Status::pass);
  ASSERT_TRUE(find(r, "sqrt(J) stability"));
  EXPECT_EQ(find(r, "sqrt(J) stability")->status, Status::info);
  EXPECT_EQ(find(r, "sqrt(J) stability")->summary, "radical NOT Poisson stable, witness {y2 - t3, y3} = 1");
  EXPECT_EQ(find(r, "stated radical")->status, Status::pass);
  EXPECT_EQ(find(r, "spectral cover round trip")->status, Status::pass);
  EXPECT_EQ(find(r, "F-manifold")->status, Status::pass);
  EXPECT_TRUE(has(r.text(), "    d2 o d2 = -t3^2*e1 + 2*t3*e2\n"));
  EXPECT_TRUE(has(r.text(), "result: PASS (exit 0)\n"));
}

TEST(CheckCommand, CorruptedFailsByBothRoutes) {
  auto s = read_spec_file(specs + "/corrupted.json");
  for (auto route : {Route::identity, Route::spectral, Route::both}) {
    RunOptions o;
    o.route = route;
    auto r = cmd_check(s, "corrupted", o);
    EXPECT_EQ(r.exit_code, exit_check_failed);
    ASSERT_TRUE(find(r, "F-manifold"));
    EXPECT_EQ(find(r, "F-manifold")->status, Status::fail);
  }
}

TEST(CheckCommand, RankFailure) {
  auto r = cmd_check(read_spec_text(R"json({"n": 2, "mode": "ideal", "ideal": ["y1 - 1", "y2"]})json"), "rank");
  EXPECT_EQ(r.exit_code, exit_check_failed);
  EXPECT_TRUE(has(r.text(), "fiber dimension 1 != 2"));
}

TEST(CheckCommand, AxiomFailure) {
  auto r = cmd_check(read_spec_text(R"json({"n": 2, "mode": "structure_constants",
    "structure_constants": {"(1,1)": "e1", "(1,2)": "e2", "(2,1)": "0", "(2,2)": "0"}})json"), "bad");
  EXPECT_EQ(r.exit_code, exit_check_failed);
  EXPECT_EQ(find(r, "multiplication axioms")->status, Status::fail);
}

TEST(CheckCommand, BudgetThrows) {
  RunOptions o;
  o.budget = 1;
  EXPECT_THROW(cmd_check(read_spec_text(family1_spec), "family1", o), BudgetExceeded);
}

TEST(RadicalStableCommand, Family2) {
  auto r = cmd_radical_stable(read_spec_file(specs + "/family2_n3.json"), "f2");
  EXPECT_EQ(r.exit_code, exit_check_failed);
  EXPECT_EQ(find(r, "stated radical")->status, Status::pass);
  EXPECT_EQ(find(r, "sqrt(J) stability")->summary, "radical NOT Poisson stable, witness {-t3*y1 + y2, y3} = y1");
  EXPECT_THROW(cmd_radical_stable(read_spec_file(specs + "/corrupted.json"), "c"), SpecError);
}

TEST(PoissonStableCommand, IdealAndMultiplication) {
  EXPECT_EQ(cmd_poisson_stable(read_spec_text(family1_spec), "f1").exit_code, exit_ok);
  auto bad = cmd_poisson_stable(read_spec_file(specs + "/corrupted.json"), "c");
  EXPECT_EQ(bad.exit_code, exit_check_failed);
  EXPECT_TRUE(has(find(bad, "J(M, o) stability")->summary, "NOT Poisson stable"));
}

TEST(FiberCommand, Semisimple) {
  auto r = cmd_fiber(read_spec_file(specs + "/semisimple_n3.json"), "ss");
  EXPECT_EQ(r.exit_code, exit_ok);
  const auto* e = find(r, "fiber algebras");
  ASSERT_TRUE(e);
  ASSERT_EQ(e->data["points"].size(), 5u);
  for (const auto& p : e->data["points"]) EXPECT_EQ(p["algebra"]["semisimple"], true);
}

TEST(FiberCommand, ExplicitPointsAndOverrides) {
  auto s = read_spec_text(R"json({"n": 3, "mode": "ideal", "ideal": ["y1 - 1", "(y2 - t3)^2", "(y2 - t3)*y3", "y3^2"],
    "sample_points": [["1", "2", "1/3"]]})json");
  auto r = cmd_fiber(s, "f");
  ASSERT_EQ(find(r, "fiber algebras")->data["points"].size(), 1u);
  EXPECT_EQ(find(r, "fiber algebras")->data["points"][0]["point"], json({"1", "2", "1/3"}));
  RunOptions o;
  o.samples = 3;
  EXPECT_EQ(find(cmd_fiber(s, "f", o), "fiber algebras")->data["points"].size(), 3u);
}

TEST(EulerCommand, Examples) {
  auto tate = cmd_euler(read_spec_file(specs + "/euler_hodge_tate.json"), "t");
  EXPECT_EQ(tate.exit_code, exit_ok);
  auto non = cmd_euler(read_spec_file(specs + "/euler_nontate.json"), "n");
  // non-proportional fields are the expected answer here, not a failure
  EXPECT_EQ(non.exit_code, exit_ok);
  EXPECT_EQ(find(non, "[E1, E2]")->status, Status::pass);
  EXPECT_EQ(find(non, "proportional")->summary, "no, some p != q");
  EXPECT_EQ(find(non, "proportional")->data["proportional"], false);
  EXPECT_THROW(cmd_euler(read_spec_text(family1_spec), "f"), SpecError);
}

TEST(AlgebraChecks, ExteriorAndQuadratic) {
  auto ext = cmd_check(read_spec_file(specs + "/exterior2.json"), "ext");
  EXPECT_EQ(ext.exit_code, exit_ok);
  const auto* w = find(ext, "odd nilpotent witness");
  ASSERT_TRUE(w);
  EXPECT_EQ(w->data["delta_prime"], json({"0", "-1", "0", "0"}));
  EXPECT_EQ(w->data["n"], json({"0", "0", "0", "1"}));

  auto q2 = cmd_fiber(read_spec_file(specs + "/quadratic_q2.json"), "q2");
  EXPECT_EQ(q2.exit_code, exit_ok);
  EXPECT_TRUE(has(q2.text(), "semisimple"));
}

TEST(Reports, ByteStableAndJsonShape) {
  auto s = read_spec_text(family1_spec);
  EXPECT_EQ(cmd_check(s, "x").text(), cmd_check(s, "x").text());
  auto j = cmd_check(s, "x").to_json();
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_TRUE(j["groebner"].contains("pairs_reduced"));
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name") && c.contains("status") && c.contains("summary") && c.contains("details") && c.contains("data"));
    EXPECT_TRUE(c["status"] == "pass" || c["status"] == "fail" || c["status"] == "info");
  }
  RunOptions o;
  o.timing = true;
  EXPECT_TRUE(cmd_check(s, "x", o).to_json().contains("seconds"));
}

TEST(ExampleCommand, Family1) {
  auto j = cmd_example(1, 3, {"t3", "0"});
  EXPECT_EQ(j["ideal"], json({"y1 - 1", "(y2 - t3)^2", "(y2 - t3)*y3", "y3^2"}));
  EXPECT_EQ(j["radical"], json({"y1 - 1", "y2 - t3", "y3"}));
  EXPECT_EQ(j["mode"], "ideal");
  // the output is itself a valid spec
  auto r = cmd_check(read_spec(j), "example");
  EXPECT_EQ(r.exit_code, exit_ok);
}

TEST(ExampleCommand, Family2) {
  auto j = cmd_example(2, 4);
  EXPECT_EQ(j["ideal"], json({"y1 - 1", "(y2 - t3*y1 - 2*t4*y3)^2", "(y2 - t3*y1 - 2*t4*y3)*y3", "y3^3", "y4 - y3^2"}));
  EXPECT_EQ(j["radical"], json({"y1 - 1", "y2 - t3*y1", "y3", "y4"}));
  EXPECT_EQ(cmd_check(read_spec(j), "example").exit_code, exit_ok);
}

TEST(ExampleCommand, Errors) {
  EXPECT_THROW(cmd_example(2, 2), std::invalid_argument);
  EXPECT_THROW(cmd_example(3, 3), std::invalid_argument);
  EXPECT_THROW(cmd_example(1, 3, {"t3"}), std::invalid_argument);
  EXPECT_THROW(cmd_example(1, 3, {"t1", "0"}), std::invalid_argument);
  EXPECT_THROW(cmd_example(1, 3, {"t3 +", "0"}), ParseError);
}
