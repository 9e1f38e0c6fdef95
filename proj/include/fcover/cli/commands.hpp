#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcover/cli/report.hpp"
#include "fcover/cli/spec_io.hpp"
#include "fcover/fcover.hpp"

namespace fcover::cli {

struct RunOptions {
  Route route = Route::both;
  std::optional<std::size_t> samples;  // command-line overrides of the spec
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget;
  bool timing = false;
};

namespace detail {

inline GroebnerOptions groebner_options(const ManifoldSpec& s, const RunOptions& o) {
  GroebnerOptions g;
  if (o.budget)
    g.max_pairs = *o.budget;
  else if (s.budget)
    g.max_pairs = *s.budget;
  return g;
}

// Explicit sample_points win unless --samples or --seed asks for seeded points.
inline std::vector<Point> sample_points(const ManifoldSpec& s, const RunOptions& o) {
  if (s.sample_points && !o.samples && !o.seed) return *s.sample_points;
  std::size_t count = o.samples ? *o.samples : s.samples.value_or(5);
  return default_sample_points(s.n, count, o.seed.value_or(s.seed));
}

inline json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) {
    json q = json::array();
    for (const auto& x : p) q.push_back(x.get_str());
    a.push_back(std::move(q));
  }
  return a;
}

inline std::string vector_string(const Vector& v) { return point_to_string(v); }

inline json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline std::string list_string(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string labels_string(const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + labels[i];
  return s;
}

struct AlgebraSummary {
  std::string line;
  json data;
  bool semisimple = false;
};

inline AlgebraSummary summarize_algebra(const PointAlgebra& a, bool with_idempotents, std::uint64_t seed) {
  AlgebraSummary out;
  auto g = trace_form(a);
  auto det = determinant(g);
  auto nr = nilradical(a);
  out.semisimple = det != 0;
  if (out.semisimple != nr.basis.empty()) throw InternalInconsistency("trace-form determinant and nilradical disagree");
  out.line = "dim " + std::to_string(a.dim()) + ", trace-form det " + det.get_str() + ", " +
             (out.semisimple ? "semisimple" : "not semisimple") + ", nilradical powers " +
             list_string(nr.power_dimensions) + ", local factors " + std::to_string(nr.local_factor_count);
  out.data["dim"] = a.dim();
  out.data["trace_form_det"] = det.get_str();
  out.data["semisimple"] = out.semisimple;
  out.data["nilradical_powers"] = nr.power_dimensions;
  out.data["local_factors"] = nr.local_factor_count;
  if (with_idempotents) {
    auto rep = orthogonal_idempotents(a, IdempotentOptions{20, seed});
    if (rep.idempotents) {
      json list = json::array();
      std::string s;
      for (const auto& e : *rep.idempotents) {
        list.push_back(vector_json(e));
        s += (s.empty() ? "" : ", ") + vector_string(e);
      }
      out.data["idempotents"] = std::move(list);
      out.line += ", idempotents " + s;
    } else {
      out.data["idempotents"] = nullptr;
      out.line += ", no splitting element over Q (count only)";
    }
  }
  return out;
}

inline void add_rank_check(Report& rep, const IdealPresentation& ideal, std::size_t n, const std::vector<Point>& pts,
                           const GroebnerOptions& go) {
  auto rc = spectral_cover_rank_check(ideal, n, pts, go);
  auto& e = rep.add("rank check", rc.passed ? Status::pass : Status::fail,
                    rc.passed ? "fiber dimension " + std::to_string(n) + " with basis y1..y" + std::to_string(n) +
                                    " and y1 = 1 at " + std::to_string(pts.size()) + " sample points"
                              : rc.reason);
  e.data["passed"] = rc.passed;
  e.data["dimensions"] = rc.dimensions;
  e.data["points"] = points_json(pts);
  if (rc.failing_point) e.data["failing_point"] = vector_json(*rc.failing_point);
}

inline void add_f_manifold(Report& rep, const FMultiplication& m, Route route, const GroebnerOptions& go) {
  auto v = is_f_manifold(m, route, go);
  rep.stats += v.stats;
  auto& e = rep.add("F-manifold (" + to_string(route) + ")", v.f_manifold ? Status::pass : Status::fail,
                    v.f_manifold ? "structure identity holds" : "structure identity fails");
  if (v.identity_route) {
    e.data["identity_route"] = *v.identity_route;
    e.details.push_back(std::string("identity route: ") + (*v.identity_route ? "all defects vanish" : "nonzero defect"));
  }
  if (v.defect) {
    const auto& d = *v.defect;
    std::string q = "(" + std::to_string(d.indices[0]) + "," + std::to_string(d.indices[1]) + "," +
                    std::to_string(d.indices[2]) + "," + std::to_string(d.indices[3]) + ")";
    e.details.push_back("defect at " + q + " = " + d.defect.to_string());
    e.data["defect"] = {{"quadruple", d.indices}, {"value", d.defect.to_string()}};
  }
  if (v.identity_compatibility) {
    const auto& d = *v.identity_compatibility;
    std::string q = "(" + std::to_string(d.indices[0]) + "," + std::to_string(d.indices[1]) + ")";
    e.details.push_back("[e, X o Y] - X o [e, Y] - [e, X] o Y at " + q + " = " + d.defect.to_string());
    e.data["identity_compatibility"] = {{"pair", d.indices}, {"value", d.defect.to_string()}};
  }
  if (v.spectral_route) {
    e.data["spectral_route"] = *v.spectral_route;
    e.details.push_back(std::string("spectral route: J ") + (*v.spectral_route ? "Poisson stable" : "NOT Poisson stable"));
  }
  if (v.poisson) {
    e.details.push_back("witness " + v.poisson->to_string());
    e.data["poisson_witness"] = v.poisson->to_string();
  }
}

inline Entry& add_stability(Report& rep, const std::string& name, const IdealPresentation& ideal,
                            const GroebnerOptions& go, bool informational, const std::string& what) {
  auto r = ideal_poisson_stable(ideal, go);
  rep.stats += r.stats;
  Status st = informational ? Status::info : (r.stable ? Status::pass : Status::fail);
  std::string summary = r.stable ? what + " Poisson stable" : what + " NOT Poisson stable, witness " + r.witness->to_string();
  auto& e = rep.add(name, st, summary);
  e.data["stable"] = r.stable;
  if (r.witness) {
    e.data["witness"] = {{"pair", {r.witness->i + 1, r.witness->j + 1}},
                         {"first", r.witness->first.to_string()},
                         {"second", r.witness->second.to_string()},
                         {"bracket", r.witness->bracket.to_string()}};
  }
  return e;
}

inline void add_radical(Report& rep, const IdealPresentation& ideal, const IdealPresentation& stated,
                        const GroebnerOptions& go) {
  auto cert = verify_stated_radical(ideal, stated, go);
  auto jgb = buchberger(ideal, go);
  rep.stats += jgb.stats();
  auto& e = rep.add("stated radical", cert.certified() ? Status::pass : Status::fail,
                    cert.certified() ? "sqrt(J) equals the stated ideal" : "stated ideal is not certified as sqrt(J)");
  json gens = json::array();
  for (std::size_t k = 0; k < stated.size(); ++k) {
    const auto& g = stated.generators()[k];
    bool in_j = ideal_contains(g, jgb);
    e.details.push_back(g.to_string() + (cert.generator_in_radical[k] ? ": in sqrt(J)" : ": NOT in sqrt(J)") +
                        (in_j ? ", in J" : ", not in J"));
    gens.push_back({{"generator", g.to_string()}, {"in_radical", static_cast<bool>(cert.generator_in_radical[k])}, {"in_ideal", in_j}});
  }
  e.details.push_back(std::string("J inside stated ideal: ") + (cert.ideal_inside ? "yes" : "no"));
  e.details.push_back(std::string("stated ideal of the form (yi - pi(t)): ") + (cert.stated_is_prime ? "yes" : "no"));
  e.data["generators"] = std::move(gens);
  e.data["ideal_inside"] = cert.ideal_inside;
  e.data["stated_is_prime"] = cert.stated_is_prime;
  e.data["presentations_equal"] = cert.presentations_equal;
}

inline void add_euler(Report& rep, const GradingSpec& gs) {
  GradingData gd(gs.bidegrees, gs.r);
  auto an = euler_fields(gd);
  std::string grading;
  for (const auto& b : gd.bidegrees())
    grading += (grading.empty() ? "" : ", ") + std::string("(") + std::to_string(b.p) + "," + std::to_string(b.q) + ")";
  auto& f = rep.add("Euler fields", Status::info, "bidegrees " + grading);
  f.details.push_back("E1 = " + an.e1.to_string());
  f.details.push_back("E2 = " + an.e2.to_string());
  f.data["bidegrees"] = json::array();
  for (const auto& b : gd.bidegrees()) f.data["bidegrees"].push_back({b.p, b.q});
  f.data["E1"] = an.e1.to_string();
  f.data["E2"] = an.e2.to_string();
  auto& c = rep.add("[E1, E2]", an.commutator.is_zero() ? Status::pass : Status::fail, an.commutator.to_string());
  c.data["commutator"] = an.commutator.to_string();
  bool expected = gd.hodge_tate();
  auto& p = rep.add("proportional", expected == an.proportional ? Status::pass : Status::fail,
                    std::string(an.proportional ? "yes" : "no") + (gd.hodge_tate() ? ", all p = q" : ", some p != q"));
  p.data["proportional"] = an.proportional;
  p.data["all_p_equal_q"] = gd.hodge_tate();
}

inline void add_super_algebra(Report& rep, const AlgebraSpec& as) {
  std::optional<SuperFrobeniusAlgebra> a;
  try {
    a.emplace(build_super_algebra(as));
  } catch (const InvariantViolation& ex) {
    rep.add("super algebra axioms", Status::fail, ex.what());
    return;
  }
  rep.add("super algebra axioms", Status::pass, "supercommutative, parity additive, unit, nondegenerate pairing");

  auto inv = frobenius_invariance_check(*a);
  auto& ie = rep.add("pairing invariance", inv.invariant ? Status::pass : Status::fail,
                     inv.invariant ? "g(a o b, c) = g(a, b o c) on all basis triples"
                                   : "fails at (" + std::to_string((*inv.triple)[0]) + "," +
                                         std::to_string((*inv.triple)[1]) + "," + std::to_string((*inv.triple)[2]) + ")");
  ie.data["invariant"] = inv.invariant;
  if (inv.triple) ie.data["triple"] = *inv.triple;

  bool squares = true;
  for (std::size_t b = 0; b < a->dim(); ++b)
    if (a->parity()[b] == Parity::odd && !is_zero(a->multiply(a->basis_vector(b), a->basis_vector(b)))) squares = false;
  rep.add("odd squares", squares ? Status::pass : Status::fail,
          squares ? "D o D = 0 for every odd basis class" : "some odd basis class squares to a nonzero element");

  std::optional<Vector> delta = as.delta;
  if (!delta)
    for (std::size_t b = 0; b < a->dim() && !delta; ++b)
      if (a->parity()[b] == Parity::odd) delta = a->basis_vector(b);
  if (!delta) return;
  try {
    auto w = odd_nilpotent_witness(*a, *delta);
    auto& e = rep.add("odd nilpotent witness", Status::pass, "N = D o D' is even, g(N, e) = 1, N o N = 0");
    e.details.push_back("D  = " + vector_string(*delta));
    e.details.push_back("D' = " + vector_string(w.delta_prime));
    e.details.push_back("N  = " + vector_string(w.n));
    e.data["delta"] = vector_json(*delta);
    e.data["delta_prime"] = vector_json(w.delta_prime);
    e.data["n"] = vector_json(w.n);
  } catch (const InvariantViolation& ex) {
    rep.add("odd nilpotent witness", Status::fail, ex.what());
  }
}

inline void add_even_algebra(Report& rep, const AlgebraSpec& as, std::uint64_t seed) {
  std::optional<PointAlgebra> a;
  try {
    a.emplace(build_point_algebra(as));
  } catch (const InvariantViolation& ex) {
    rep.add("algebra axioms", Status::fail, ex.what());
    return;
  }
  rep.add("algebra axioms", Status::pass, "commutative, associative, unit");
  auto s = summarize_algebra(*a, true, seed);
  auto& e = rep.add("point algebra", Status::info, s.line);
  auto g = trace_form(*a);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Vector row;
    for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g(r, c));
    e.details.push_back("trace form row " + std::to_string(r + 1) + ": " + vector_string(row));
  }
  e.data = std::move(s.data);
}

template <class F>
Report timed(const std::string& command, const std::string& source, const RunOptions& o, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = command;
  rep.source = source;
  body(rep);
  if (o.timing) rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.finish();
  return rep;
}

inline void fiber_section(Report& rep, const ManifoldSpec& s, const RunOptions& o, const GroebnerOptions& go,
                          bool with_idempotents) {
  const auto pts = sample_points(s, o);
  std::optional<FMultiplication> m;
  std::optional<IdealPresentation> ideal;
  if (s.mode == Mode::structure_constants)
    m.emplace(build_multiplication(s));
  else
    ideal.emplace(build_ideal(s.ideal, s.n, "ideal"));

  auto& e = rep.add("fiber algebras", Status::pass, std::to_string(pts.size()) + " sample points");
  if (ideal) {
    FiberQuotient q(*ideal, pts.front(), go);
    std::vector<std::string> labels;
    for (const auto& mono : q.standard_monomials()) labels.push_back(Polynomial::term(ideal->vars(), mono, 1).to_string());
    e.details.push_back("basis: standard monomials " + labels_string(labels) + " at the first point");
  } else {
    std::vector<std::string> labels;
    for (std::size_t a = 1; a <= s.n; ++a) labels.push_back("d" + std::to_string(a));
    e.details.push_back("basis: " + labels_string(labels));
  }
  e.data["points"] = json::array();
  for (const auto& t0 : pts) {
    json pd;
    pd["point"] = vector_json(t0);
    try {
      auto a = m ? fiber_algebra(*m, t0) : fiber_algebra(*ideal, t0, s.n, go);
      auto sum = summarize_algebra(a, with_idempotents, o.seed.value_or(s.seed));
      e.details.push_back("t = " + point_to_string(t0) + ": " + sum.line);
      pd["algebra"] = std::move(sum.data);
    } catch (const InvariantViolation& ex) {
      e.status = Status::fail;
      e.details.push_back("t = " + point_to_string(t0) + ": " + ex.what());
      pd["error"] = ex.what();
    }
    e.data["points"].push_back(std::move(pd));
  }
}

}  // namespace detail

/// Runs every check the spec supports. Radical instability is reported but does not fail.
inline Report cmd_check(const ManifoldSpec& s, const std::string& source, const RunOptions& o = {}) {
  return detail::timed("check", source, o, [&](Report& rep) {
    const auto go = detail::groebner_options(s, o);
    if (s.mode == Mode::structure_constants) {
      std::optional<FMultiplication> m;
      try {
        m.emplace(build_multiplication(s));
      } catch (const InvariantViolation& ex) {
        rep.add("multiplication axioms", Status::fail, ex.what());
        return;
      }
      rep.add("multiplication axioms", Status::pass, "commutative, associative, e o X = X");
      detail::add_f_manifold(rep, *m, o.route, go);
      auto pts = detail::sample_points(s, o);
      if (m->identity_is_first_coordinate()) detail::add_rank_check(rep, spectral_cover_ideal(*m), s.n, pts, go);
      detail::fiber_section(rep, s, o, go, false);
    } else if (s.mode == Mode::ideal) {
      auto ideal = build_ideal(s.ideal, s.n, "ideal");
      auto pts = detail::sample_points(s, o);
      detail::add_rank_check(rep, ideal, s.n, pts, go);
      if (rep.any_failed()) return;
      detail::add_stability(rep, "J stability", ideal, go, false, "J");
      std::optional<FMultiplication> m;
      try {
        m.emplace(multiplication_from_ideal(ideal, s.n, pts, go));
      } catch (const InvariantViolation& ex) {
        rep.add("reconstruction", Status::fail, ex.what());
        return;
      }
      auto& rec = rep.add("reconstruction", Status::pass, "multiplication read off J, e = d1");
      for (std::size_t a = 0; a < s.n; ++a)
        for (std::size_t b = a; b < s.n; ++b) {
          std::string key = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
          rec.details.push_back("d" + std::to_string(a + 1) + " o d" + std::to_string(b + 1) + " = " +
                                m->product(a, b).to_string());
          rec.data[key] = m->product(a, b).to_string();
        }
      bool same = ideal_equals(spectral_cover_ideal(*m), ideal, go);
      rep.add("spectral cover round trip", same ? Status::pass : Status::fail,
              same ? "J(M, o) of the reconstructed multiplication equals J" : "J(M, o) differs from J");
      detail::add_f_manifold(rep, *m, o.route, go);
      detail::fiber_section(rep, s, o, go, false);
      if (s.radical) {
        auto stated = build_ideal(*s.radical, s.n, "radical");
        detail::add_radical(rep, ideal, stated, go);
        detail::add_stability(rep, "sqrt(J) stability", stated, go, true, "radical");
      }
    }
    if (s.gradings) detail::add_euler(rep, *s.gradings);
    if (s.algebra) {
      if (s.algebra->has_odd())
        detail::add_super_algebra(rep, *s.algebra);
      else
        detail::add_even_algebra(rep, *s.algebra, o.seed.value_or(s.seed));
    }
  });
}

inline Report cmd_euler(const ManifoldSpec& s, const std::string& source, const RunOptions& o = {}) {
  if (!s.gradings) throw SpecError("euler: the spec has no gradings");
  return detail::timed("euler", source, o, [&](Report& rep) { detail::add_euler(rep, *s.gradings); });
}

inline Report cmd_fiber(const ManifoldSpec& s, const std::string& source, const RunOptions& o = {}) {
  if (s.mode == Mode::none && !s.algebra) throw SpecError("fiber: the spec has no manifold and no algebra");
  return detail::timed("fiber", source, o, [&](Report& rep) {
    const auto go = detail::groebner_options(s, o);
    if (s.mode != Mode::none) {
      try {
        detail::fiber_section(rep, s, o, go, true);
      } catch (const InvariantViolation& ex) {
        rep.add("fiber algebras", Status::fail, ex.what());
      }
    }
    if (s.algebra) {
      if (s.algebra->has_odd())
        detail::add_super_algebra(rep, *s.algebra);
      else
        detail::add_even_algebra(rep, *s.algebra, o.seed.value_or(s.seed));
    }
  });
}

/// Exit 0 iff the spec's ideal (or the spectral cover ideal of its multiplication) is stable.
inline Report cmd_poisson_stable(const ManifoldSpec& s, const std::string& source, const RunOptions& o = {}) {
  if (s.mode == Mode::none) throw SpecError("poisson-stable: the spec has no ideal or structure constants");
  return detail::timed("poisson-stable", source, o, [&](Report& rep) {
    const auto go = detail::groebner_options(s, o);
    if (s.mode == Mode::ideal) {
      detail::add_stability(rep, "J stability", build_ideal(s.ideal, s.n, "ideal"), go, false, "J");
      return;
    }
    try {
      detail::add_stability(rep, "J(M, o) stability", spectral_cover_ideal(build_multiplication(s)), go, false, "J");
    } catch (const InvariantViolation& ex) {
      rep.add("multiplication axioms", Status::fail, ex.what());
    }
  });
}

/// Exit 0 iff the stated radical is Poisson stable.
inline Report cmd_radical_stable(const ManifoldSpec& s, const std::string& source, const RunOptions& o = {}) {
  if (s.mode != Mode::ideal || !s.radical) throw SpecError("radical-stable: the spec has no stated radical");
  return detail::timed("radical-stable", source, o, [&](Report& rep) {
    const auto go = detail::groebner_options(s, o);
    auto ideal = build_ideal(s.ideal, s.n, "ideal");
    auto stated = build_ideal(*s.radical, s.n, "radical");
    detail::add_radical(rep, ideal, stated, go);
    detail::add_stability(rep, "sqrt(J) stability", stated, go, false, "radical");
  });
}

// ---------------------------------------------------------------------------------------
// Example specs

namespace detail {

// "yi - rho" with the y variable first, as written by hand.
inline std::string shifted(std::size_t i, const Polynomial& rho) {
  std::string y = "y" + std::to_string(i);
  if (rho.is_zero()) return y;
  std::string s = (-rho).with_order(OrderKind::block).to_string();
  return s[0] == '-' ? y + " - " + s.substr(1) : y + " + " + s;
}

inline std::string factor(const std::string& s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; }

inline std::string power(const std::string& s, unsigned k) {
  if (k == 1) return s;
  return factor(s) + "^" + std::to_string(k);
}

}  // namespace detail

/// Spec for family 1 (rho lists rho_2..rho_n, default 0) or family 2 (no parameters).
inline json cmd_example(int family, std::size_t n, const std::vector<std::string>& rho = {}) {
  if (n < 1) throw std::invalid_argument("example: n must be at least 1");
  VariableSet vars(n);
  json spec;
  std::vector<std::string> gens, radical;
  IdealPresentation expected(vars, {});
  if (family == 1) {
    if (!rho.empty() && rho.size() != n - 1)
      throw std::invalid_argument("example: family 1 needs rho_2..rho_n (" + std::to_string(n - 1) + " values), got " +
                                  std::to_string(rho.size()));
    std::vector<Polynomial> r{Polynomial::constant(vars, 1)};
    for (std::size_t i = 2; i <= n; ++i)
      r.push_back(rho.empty() ? Polynomial(vars) : detail::parse_field("rho" + std::to_string(i), rho[i - 2], vars));
    expected = family1(vars, r);
    gens.push_back("y1 - 1");
    for (std::size_t i = 2; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) {
        auto a = detail::shifted(i, r[i - 1]), b = detail::shifted(j, r[j - 1]);
        gens.push_back(i == j ? detail::power(a, 2) : detail::factor(a) + "*" + detail::factor(b));
      }
    radical.push_back("y1 - 1");
    for (std::size_t i = 2; i <= n; ++i) radical.push_back(detail::shifted(i, r[i - 1]));
    std::string d = "family 1, rho = (1";
    for (std::size_t i = 1; i < n; ++i) d += ", " + r[i].to_string();
    spec["description"] = d + ")";
  } else if (family == 2) {
    if (n < 3) throw std::invalid_argument("example: family 2 needs n >= 3");
    if (!rho.empty()) throw std::invalid_argument("example: family 2 takes no rho parameters");
    expected = family2(vars);
    auto u = detail::shifted(2, family2_rho2(vars));
    gens = {"y1 - 1", detail::power(u, 2), detail::factor(u) + "*y3", detail::power("y3", static_cast<unsigned>(n - 1))};
    for (std::size_t k = 4; k <= n; ++k)
      gens.push_back("y" + std::to_string(k) + " - " + detail::power("y3", static_cast<unsigned>(k - 2)));
    radical = {"y1 - 1", "y2 - t3*y1"};
    for (std::size_t k = 3; k <= n; ++k) radical.push_back("y" + std::to_string(k));
    spec["description"] = "family 2, rho2 = " + family2_rho2(vars).with_order(OrderKind::block).to_string();
  } else {
    throw std::invalid_argument("example: family must be 1 or 2");
  }

  // the emitted strings must parse back to the library's generators
  auto parsed = build_ideal(gens, n, "ideal");
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!(parsed.generators().at(k) == expected.generators().at(k)))
      throw InternalInconsistency("example generator " + gens[k] + " does not match the family");

  spec["family"] = family;
  spec["n"] = n;
  spec["mode"] = "ideal";
  spec["ideal"] = gens;
  spec["radical"] = radical;
  spec["seed"] = 0;
  return spec;
}

}  // namespace fcover::cli
