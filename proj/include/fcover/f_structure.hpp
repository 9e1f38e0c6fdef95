#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcover/errors.hpp"
#include "fcover/groebner.hpp"
#include "fcover/linalg.hpp"
#include "fcover/poisson.hpp"
#include "fcover/polynomial.hpp"

namespace fcover {

using Point = std::vector<Rational>;

/// Polynomial vector field sum_i a_i(t) d/dti. Coefficients never involve y or z.
class VectorField {
 public:
  VectorField(VariableSet vars, std::vector<Polynomial> coeffs) : vars_(vars), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != vars.dim()) throw DimensionMismatch("vector field needs n coefficients");
    for (auto& c : coeffs_) {
      if (c.vars() != vars) throw DimensionMismatch("vector field coefficient over a different VariableSet");
      if (c.uses_y() || c.uses_z())
        throw std::invalid_argument("vector field coefficient depends on fiber variables: " + c.to_string());
      c = c.with_order(MonomialOrder{});
    }
  }

  static VectorField zero(VariableSet vars) { return VectorField(vars, std::vector<Polynomial>(vars.dim(), Polynomial(vars))); }

  // d/dta, a is 1-based.
  static VectorField coordinate(VariableSet vars, std::size_t a) {
    auto f = zero(vars);
    f.coeffs_.at(a - 1) = Polynomial::constant(vars, 1);
    return f;
  }

  /// Inverse of symbol(): p must be homogeneous of degree one in y with t-only coefficients.
  static VectorField from_symbol(const Polynomial& p) {
    const auto& vars = p.vars();
    std::vector<Polynomial> coeffs(vars.dim(), Polynomial(vars));
    for (const auto& [m, c] : p.terms()) {
      if (p.y_degree(m) != 1 || m[vars.z()] != 0)
        throw std::invalid_argument("not the symbol of a vector field: " + p.to_string());
      for (std::size_t i = 1; i <= vars.dim(); ++i) {
        if (m[vars.y(i)] == 0) continue;
        Monomial rest(m);
        rest[vars.y(i)] = 0;
        coeffs[i - 1].add_term(rest, c);
      }
    }
    return VectorField(vars, std::move(coeffs));
  }

  const VariableSet& vars() const noexcept { return vars_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }

  Polynomial symbol() const {
    Polynomial s(vars_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      s += coeffs_[i] * Polynomial::variable(vars_, vars_.y(i + 1));
    }
    return s;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& c) { return c.is_zero(); });
  }

  VectorField& operator+=(const VectorField& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_.at(i);
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_.at(i);
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Polynomial& f, VectorField x) {
    for (auto& c : x.coeffs_) c = f * c;
    return x;
  }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_; }

  // Written in the e1..en notation of spec files, grouped by basis field.
  std::string to_string() const {
    std::string s = symbol().with_order(OrderKind::block).to_string();
    std::replace(s.begin(), s.end(), 'y', 'e');
    return s;
  }

 private:
  VariableSet vars_;
  std::vector<Polynomial> coeffs_;
};

// [X, Y]^k = sum_i X^i dYk/dti - Y^i dXk/dti
inline VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.vars() != y.vars()) throw DimensionMismatch("Lie bracket across VariableSets");
  const auto& vars = x.vars();
  std::vector<Polynomial> out(x.dim(), Polynomial(vars));
  for (std::size_t k = 0; k < x.dim(); ++k) {
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (!x[i].is_zero()) {
        auto d = partial_derivative(y[k], vars.t(i + 1));
        if (!d.is_zero()) out[k] += x[i] * d;
      }
      if (!y[i].is_zero()) {
        auto d = partial_derivative(x[k], vars.t(i + 1));
        if (!d.is_zero()) out[k] -= y[i] * d;
      }
    }
  }
  return VectorField(vars, std::move(out));
}

/// Commutative associative O_M-bilinear multiplication on the tangent sheaf, given by the
/// products of coordinate fields, with a designated identity field e.
///
/// The constructor verifies commutativity, associativity on basis triples, and e o d_b = d_b.
class FMultiplication {
 public:
  // products[a * n + b] = d_{a+1} o d_{b+1}
  FMultiplication(VariableSet vars, std::vector<VectorField> products, VectorField identity)
      : vars_(vars), products_(std::move(products)), identity_(std::move(identity)) {
    const std::size_t n = vars.dim();
    if (products_.size() != n * n) throw DimensionMismatch("FMultiplication needs n*n products");
    for (const auto& p : products_)
      if (p.vars() != vars) throw DimensionMismatch("product field over a different VariableSet");
    if (identity_.vars() != vars) throw DimensionMismatch("identity field over a different VariableSet");
    validate();
  }

  const VariableSet& vars() const noexcept { return vars_; }
  std::size_t dim() const noexcept { return vars_.dim(); }
  const VectorField& identity() const noexcept { return identity_; }

  // 0-based.
  const VectorField& product(std::size_t a, std::size_t b) const { return products_.at(a * dim() + b); }
  // C_{ab}^c, 0-based.
  const Polynomial& constant(std::size_t a, std::size_t b, std::size_t c) const { return product(a, b)[c]; }

  VectorField multiply(const VectorField& x, const VectorField& y) const {
    auto out = VectorField::zero(vars_);
    for (std::size_t a = 0; a < dim(); ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (y[b].is_zero()) continue;
        const auto& p = product(a, b);
        if (p.is_zero()) continue;
        out += (x[a] * y[b]) * p;
      }
    }
    return out;
  }

  bool identity_is_first_coordinate() const { return identity_ == VectorField::coordinate(vars_, 1); }

  friend bool operator==(const FMultiplication& a, const FMultiplication& b) {
    return a.vars_ == b.vars_ && a.products_ == b.products_ && a.identity_ == b.identity_;
  }

 private:
  void validate() const {
    const std::size_t n = dim();
    auto basis = [&](std::size_t a) { return VectorField::coordinate(vars_, a + 1); };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (!(product(a, b) == product(b, a)))
          throw InvariantViolation("multiplication is not commutative at (" + std::to_string(a + 1) + "," +
                                   std::to_string(b + 1) + ")");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!(multiply(product(a, b), basis(c)) == multiply(basis(a), product(b, c))))
            throw InvariantViolation("multiplication is not associative at (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
    for (std::size_t b = 0; b < n; ++b)
      if (!(multiply(identity_, basis(b)) == basis(b)))
        throw InvariantViolation("e o d" + std::to_string(b + 1) + " != d" + std::to_string(b + 1));
  }

  VariableSet vars_;
  std::vector<VectorField> products_;
  VectorField identity_;
};

inline VectorField multiply_fields(const FMultiplication& m, const VectorField& x, const VectorField& y) {
  return m.multiply(x, y);
}

// P_A(B, C) = [A, B o C] - [A, B] o C - B o [A, C]
inline VectorField tangent_poisson_tensor(const FMultiplication& m, const VectorField& a, const VectorField& b,
                                          const VectorField& c) {
  return lie_bracket(a, m.multiply(b, c)) - m.multiply(lie_bracket(a, b), c) - m.multiply(b, lie_bracket(a, c));
}

/// Left side of the F-manifold structure identity,
///   P_{X o Y}(Z, W) - X o P_Y(Z, W) - Y o P_X(Z, W),
/// which expands into the nine bracket/product terms and is O_M-linear in every slot.
inline VectorField structure_identity_defect(const FMultiplication& m, const VectorField& x, const VectorField& y,
                                             const VectorField& z, const VectorField& w) {
  return tangent_poisson_tensor(m, m.multiply(x, y), z, w) - m.multiply(x, tangent_poisson_tensor(m, y, z, w)) -
         m.multiply(y, tangent_poisson_tensor(m, x, z, w));
}

// Basis version; indices are 1-based.
inline VectorField structure_identity_defect(const FMultiplication& m, std::size_t a, std::size_t b, std::size_t c,
                                             std::size_t d) {
  const auto& v = m.vars();
  return structure_identity_defect(m, VectorField::coordinate(v, a), VectorField::coordinate(v, b),
                                   VectorField::coordinate(v, c), VectorField::coordinate(v, d));
}

// [e, X o Y] - X o [e, Y] - [e, X] o Y
inline VectorField identity_compatibility_defect(const FMultiplication& m, const VectorField& x, const VectorField& y) {
  const auto& e = m.identity();
  return lie_bracket(e, m.multiply(x, y)) - m.multiply(x, lie_bracket(e, y)) - m.multiply(lie_bracket(e, x), y);
}

/// Generators of the spectral cover ideal: symbol(e) - 1 and symbol(d_a o d_b) - y_a y_b
/// for a <= b, presented in the block order.
inline IdealPresentation spectral_cover_ideal(const FMultiplication& m) {
  const auto& vars = m.vars();
  std::vector<Polynomial> gens;
  gens.push_back(m.identity().symbol() - Polynomial::constant(vars, 1));
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t b = a; b < m.dim(); ++b)
      gens.push_back(m.product(a, b).symbol() -
                     Polynomial::variable(vars, vars.y(a + 1)) * Polynomial::variable(vars, vars.y(b + 1)));
  return IdealPresentation(vars, std::move(gens), OrderKind::block);
}

enum class Route { identity, spectral, both };

inline std::string to_string(Route r) {
  switch (r) {
    case Route::identity: return "identity";
    case Route::spectral: return "spectral";
    case Route::both: return "both";
  }
  return "?";
}

struct DefectWitness {
  std::array<std::size_t, 4> indices;  // 1-based (a, b, c, d)
  VectorField defect;
};

struct IdentityCompatibilityWitness {
  std::array<std::size_t, 2> indices;  // 1-based
  VectorField defect;
};

struct FVerdict {
  bool f_manifold = false;
  std::optional<bool> identity_route;
  std::optional<bool> spectral_route;
  std::optional<DefectWitness> defect;
  std::optional<IdentityCompatibilityWitness> identity_compatibility;
  std::optional<StabilityWitness> poisson;
  GroebnerStats stats;
};

namespace detail {

inline void run_identity_route(const FMultiplication& m, FVerdict& v) {
  const std::size_t n = m.dim();
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b)
      for (std::size_t c = 1; c <= n; ++c)
        for (std::size_t d = 1; d <= n; ++d) {
          auto defect = structure_identity_defect(m, a, b, c, d);
          if (!defect.is_zero()) {
            v.defect = DefectWitness{{a, b, c, d}, std::move(defect)};
            v.identity_route = false;
            return;
          }
        }
  const auto& vars = m.vars();
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a; b <= n; ++b) {
      auto defect =
          identity_compatibility_defect(m, VectorField::coordinate(vars, a), VectorField::coordinate(vars, b));
      if (!defect.is_zero()) {
        v.identity_compatibility = IdentityCompatibilityWitness{{a, b}, std::move(defect)};
        v.identity_route = false;
        return;
      }
    }
  v.identity_route = true;
}

inline void run_spectral_route(const FMultiplication& m, FVerdict& v, const GroebnerOptions& options) {
  auto result = ideal_poisson_stable(spectral_cover_ideal(m), options);
  v.stats += result.stats;
  v.spectral_route = result.stable;
  if (result.witness) v.poisson = std::move(result.witness);
}

}  // namespace detail

/// Decides the F-manifold property by the structure identity on coordinate fields, by
/// Poisson stability of the spectral cover ideal, or by both. With Route::both the two
/// answers must agree; a disagreement throws InternalInconsistency.
inline FVerdict is_f_manifold(const FMultiplication& m, Route route = Route::both, const GroebnerOptions& options = {}) {
  FVerdict v;
  if (route != Route::spectral) detail::run_identity_route(m, v);
  if (route != Route::identity) detail::run_spectral_route(m, v, options);
  if (route == Route::both && *v.identity_route != *v.spectral_route)
    throw InternalInconsistency("structure identity and spectral-cover stability disagree");
  v.f_manifold = route == Route::spectral ? *v.spectral_route : *v.identity_route;
  return v;
}

// ---------------------------------------------------------------------------------------
// Fibers of the spectral cover

/// K[y]/J(t0) for an ideal evaluated at a base point: reduced basis plus the standard
/// monomials, sorted ascending (so 1 comes first).
class FiberQuotient {
 public:
  FiberQuotient(const IdealPresentation& ideal, std::span<const Rational> t0, const GroebnerOptions& options = {})
      : vars_(ideal.vars()), gb_(evaluate(ideal, t0, options)) {
    enumerate_standard_monomials();
  }

  bool finite() const noexcept { return finite_; }
  std::size_t dimension() const noexcept { return standard_.size(); }
  const std::vector<Monomial>& standard_monomials() const noexcept { return standard_; }
  const GroebnerBasis& basis() const noexcept { return gb_; }

  // Coordinates of the class of f (f must be free of t after evaluation).
  Vector coordinates(const Polynomial& f) const {
    Vector v(standard_.size());
    const auto nf = normal_form(f, gb_);
    for (const auto& [m, c] : nf.terms()) {
      auto it = index_.find(m.exponents());
      if (it == index_.end()) throw InternalInconsistency("normal form left the standard monomials");
      v[it->second] = c;
    }
    return v;
  }

  Polynomial standard_polynomial(std::size_t k) const { return Polynomial::term(vars_, standard_.at(k), 1); }

 private:
  static GroebnerBasis evaluate(const IdealPresentation& ideal, std::span<const Rational> t0,
                                const GroebnerOptions& options) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) {
      if (g.uses_z()) throw std::invalid_argument("fiber of an ideal that uses z");
      gens.push_back(evaluate_base(g, t0));
    }
    return buchberger(IdealPresentation(ideal.vars(), std::move(gens), OrderKind::degrevlex), options);
  }

  void enumerate_standard_monomials() {
    if (gb_.is_unit_ideal()) {
      finite_ = true;
      return;
    }
    const std::size_t n = vars_.dim();
    for (std::size_t i = 1; i <= n; ++i) {
      bool has_pure_power = false;
      for (const auto& g : gb_.basis()) {
        const auto& lm = g.leading_monomial();
        if (lm[vars_.y(i)] > 0 && lm.degree() == lm[vars_.y(i)]) has_pure_power = true;
      }
      if (!has_pure_power) {
        finite_ = false;
        return;
      }
    }
    finite_ = true;
    auto reducible = [&](const Monomial& m) {
      for (const auto& g : gb_.basis())
        if (g.leading_monomial().divides(m)) return true;
      return false;
    };
    std::vector<Monomial> frontier{Monomial(vars_.size())};
    std::map<std::vector<Monomial::Exponent>, bool> seen;
    seen[frontier.front().exponents()] = true;
    while (!frontier.empty()) {
      auto m = frontier.back();
      frontier.pop_back();
      standard_.push_back(m);
      for (std::size_t i = 1; i <= n; ++i) {
        auto next = m * Monomial::variable(vars_.size(), vars_.y(i));
        if (seen.count(next.exponents()) || reducible(next)) continue;
        seen[next.exponents()] = true;
        frontier.push_back(next);
      }
    }
    auto ord = gb_.order();
    std::sort(standard_.begin(), standard_.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
    for (std::size_t k = 0; k < standard_.size(); ++k) index_[standard_[k].exponents()] = k;
  }

  VariableSet vars_;
  GroebnerBasis gb_;
  bool finite_ = false;
  std::vector<Monomial> standard_;
  std::map<std::vector<Monomial::Exponent>, std::size_t> index_;
};

/// Seeded rational sample points: numerators in [-5, 5], denominators in [1, 3]. Uses raw
/// mt19937 output so the points are identical on every standard library.
inline std::vector<Point> default_sample_points(std::size_t n, std::size_t count = 5, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  for (std::size_t k = 0; k < count; ++k) {
    Point p;
    for (std::size_t i = 0; i < n; ++i) {
      long num = static_cast<long>(rng() % 11) - 5;
      long den = static_cast<long>(rng() % 3) + 1;
      p.push_back(make_rational(num, den));
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

inline std::string point_to_string(std::span<const Rational> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].get_str();
  return s + ")";
}

struct RankCheckResult {
  bool passed = true;
  std::vector<std::size_t> dimensions;  // fiber dimension per sample point checked
  std::optional<Point> failing_point;
  std::string reason;
};

/// Sampled surrogate for flatness of degree n: at every sample point the fiber algebra has
/// dimension n, y1 is congruent to 1, and the classes of y1..yn form a basis.
inline RankCheckResult spectral_cover_rank_check(const IdealPresentation& ideal, std::size_t n,
                                                 std::span<const Point> samples, const GroebnerOptions& options = {}) {
  if (n != ideal.vars().dim()) throw DimensionMismatch("rank check dimension does not match the VariableSet");
  const auto& vars = ideal.vars();
  RankCheckResult r;
  for (const auto& t0 : samples) {
    FiberQuotient q(ideal, t0, options);
    auto fail = [&](std::string why) {
      r.passed = false;
      r.failing_point = t0;
      r.reason = std::move(why);
      return r;
    };
    if (!q.finite()) return fail("fiber at " + point_to_string(t0) + " is not finite");
    r.dimensions.push_back(q.dimension());
    if (q.dimension() != n)
      return fail("fiber dimension " + std::to_string(q.dimension()) + " != " + std::to_string(n) + " at " +
                  point_to_string(t0));
    if (q.coordinates(Polynomial::variable(vars, vars.y(1)) - Polynomial::constant(vars, 1)) != Vector(n))
      return fail("y1 is not congruent to 1 at " + point_to_string(t0));
    std::vector<Vector> cols;
    for (std::size_t i = 1; i <= n; ++i) cols.push_back(q.coordinates(Polynomial::variable(vars, vars.y(i))));
    if (span_dimension(cols, n) != n) return fail("classes of y1..yn are not a basis at " + point_to_string(t0));
  }
  return r;
}

/// Reads the multiplication off an ideal of the form J(M, o) with e = d1: the block-order
/// normal form of y_a y_b must be linear in y, and its coefficients are the C_ab^c
/// (the constant part standing for d1 since y1 = 1 on the cover).
inline FMultiplication multiplication_from_ideal(const IdealPresentation& ideal, std::size_t n,
                                                 std::span<const Point> samples, const GroebnerOptions& options = {}) {
  const auto& vars = ideal.vars();
  if (n != vars.dim()) throw DimensionMismatch("dimension does not match the VariableSet");
  auto rank = spectral_cover_rank_check(ideal, n, samples, options);
  if (!rank.passed) throw InvariantViolation("rank check failed: " + rank.reason);

  auto gb = buchberger(ideal.with_order(OrderKind::block), options);
  auto y = [&](std::size_t i) { return Polynomial::variable(vars, vars.y(i), OrderKind::block); };
  if (!(normal_form(y(1), gb) == Polynomial::constant(vars, 1)))
    throw InvariantViolation("y1 does not reduce to 1; the identity is not d/dt1");
  for (std::size_t c = 2; c <= n; ++c)
    if (!(normal_form(y(c), gb) == y(c)))
      throw InvariantViolation("y" + std::to_string(c) + " is not a standard monomial under the block order");

  std::vector<VectorField> products;
  products.reserve(n * n);
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      auto nf = normal_form(y(a) * y(b), gb);
      std::vector<Polynomial> coeffs(n, Polynomial(vars));
      for (const auto& [m, c] : nf.terms()) {
        if (nf.y_degree(m) > 1)
          throw InvariantViolation("normal form of y" + std::to_string(a) + "*y" + std::to_string(b) +
                                   " is not linear in y: " + nf.to_string());
        std::size_t slot = 0;  // constant part -> d1
        Monomial rest(m);
        for (std::size_t i = 1; i <= n; ++i)
          if (m[vars.y(i)] != 0) {
            slot = i - 1;
            rest[vars.y(i)] = 0;
          }
        coeffs[slot].add_term(rest, c);
      }
      products.emplace_back(vars, std::move(coeffs));
    }
  }
  return FMultiplication(vars, std::move(products), VectorField::coordinate(vars, 1));
}

inline FMultiplication multiplication_from_ideal(const IdealPresentation& ideal, std::size_t n,
                                                 const GroebnerOptions& options = {}) {
  auto samples = default_sample_points(n);
  return multiplication_from_ideal(ideal, n, samples, options);
}

// ---------------------------------------------------------------------------------------
// Stated radicals

struct RadicalCertificate {
  std::vector<bool> generator_in_radical;  // each stated generator lies in sqrt(J)
  bool ideal_inside = false;               // J is contained in the stated ideal R
  bool stated_is_prime = false;            // R = (y_i - p_i(t)), so K[t,y]/R = K[t]
  bool presentations_equal = false;        // ideal_equals(J + R, R)

  bool certified() const {
    return ideal_inside && stated_is_prime && presentations_equal &&
           std::all_of(generator_in_radical.begin(), generator_in_radical.end(), [](bool b) { return b; });
  }
};

/// Certifies sqrt(J) = R: R inside sqrt(J) by Rabinowitsch, J inside R, and R prime
/// because its block-order reduced basis is {y_i - p_i(t)}.
inline RadicalCertificate verify_stated_radical(const IdealPresentation& ideal, const IdealPresentation& stated,
                                                const GroebnerOptions& options = {}) {
  const auto& vars = ideal.vars();
  RadicalCertificate cert;
  for (const auto& g : stated.generators()) cert.generator_in_radical.push_back(radical_contains(g, ideal, options));

  auto gr = buchberger(stated.with_order(OrderKind::block), options);
  cert.ideal_inside = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                  [&](const Polynomial& g) { return ideal_contains(g, gr); });

  if (gr.size() == vars.dim()) {
    bool prime = true;
    for (std::size_t i = 0; i < gr.size() && prime; ++i) {
      const auto& lm = gr.basis()[i].leading_monomial();
      prime = lm.degree() == 1 && lm[vars.y(i + 1)] == 1 && gr.basis()[i].degree_in_y() == 1;
    }
    cert.stated_is_prime = prime;
  }
  cert.presentations_equal =
      ideal_equals(ideal.extended(stated.generators()).with_order(OrderKind::block), stated.with_order(OrderKind::block),
                   options);
  return cert;
}

// ---------------------------------------------------------------------------------------
// Example families

/// J = (y1 - 1, (yi - rho_i)(yj - rho_j) for 2 <= i <= j <= n), rho_1 = 1, rho_i in K[t2..tn].
inline IdealPresentation family1(const VariableSet& vars, const std::vector<Polynomial>& rho) {
  const std::size_t n = vars.dim();
  if (rho.size() != n) throw DimensionMismatch("family 1 needs rho_1..rho_n");
  if (!(rho[0] == Polynomial::constant(vars, 1))) throw std::invalid_argument("family 1 needs rho_1 = 1");
  for (std::size_t i = 1; i < n; ++i) {
    if (rho[i].vars() != vars) throw DimensionMismatch("rho over a different VariableSet");
    if (rho[i].uses_y() || rho[i].uses_z() || rho[i].uses_variable(vars.t(1)))
      throw std::invalid_argument("rho_" + std::to_string(i + 1) + " must be a function of t2..tn");
  }
  auto y = [&](std::size_t i) { return Polynomial::variable(vars, vars.y(i)); };
  std::vector<Polynomial> gens{y(1) - Polynomial::constant(vars, 1)};
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) gens.push_back((y(i) - rho[i - 1]) * (y(j) - rho[j - 1]));
  return IdealPresentation(vars, std::move(gens), OrderKind::block);
}

// (y1 - 1, y2 - rho_2, ..., yn - rho_n)
inline IdealPresentation family1_radical(const VariableSet& vars, const std::vector<Polynomial>& rho) {
  family1(vars, rho);
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i <= vars.dim(); ++i) gens.push_back(Polynomial::variable(vars, vars.y(i)) - rho[i - 1]);
  return IdealPresentation(vars, std::move(gens), OrderKind::block);
}

// rho_2 = t3 y1 + sum_{k=3}^{n-1} (k-1) t_{k+1} y_k
inline Polynomial family2_rho2(const VariableSet& vars) {
  const std::size_t n = vars.dim();
  if (n < 3) throw std::invalid_argument("family 2 needs n >= 3");
  auto v = [&](std::size_t idx) { return Polynomial::variable(vars, idx); };
  Polynomial rho = v(vars.t(3)) * v(vars.y(1));
  for (std::size_t k = 3; k + 1 <= n; ++k) rho += Rational(static_cast<long>(k - 1)) * (v(vars.t(k + 1)) * v(vars.y(k)));
  return rho;
}

/// J = (y1 - 1, (y2 - rho2)^2, (y2 - rho2) y3, y3^(n-1), y4 - y3^2, ..., yn - y3^(n-2)).
inline IdealPresentation family2(const VariableSet& vars) {
  const std::size_t n = vars.dim();
  auto rho = family2_rho2(vars);
  auto y = [&](std::size_t i) { return Polynomial::variable(vars, vars.y(i)); };
  auto u = y(2) - rho;
  std::vector<Polynomial> gens{y(1) - Polynomial::constant(vars, 1), u * u, u * y(3),
                               y(3).pow(static_cast<unsigned>(n - 1))};
  for (std::size_t k = 4; k <= n; ++k) gens.push_back(y(k) - y(3).pow(static_cast<unsigned>(k - 2)));
  return IdealPresentation(vars, std::move(gens), OrderKind::block);
}

// (y1 - 1, y2 - t3 y1, y3, ..., yn)
inline IdealPresentation family2_radical(const VariableSet& vars) {
  const std::size_t n = vars.dim();
  if (n < 3) throw std::invalid_argument("family 2 needs n >= 3");
  auto v = [&](std::size_t idx) { return Polynomial::variable(vars, idx); };
  std::vector<Polynomial> gens{v(vars.y(1)) - Polynomial::constant(vars, 1), v(vars.y(2)) - v(vars.t(3)) * v(vars.y(1))};
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(v(vars.y(k)));
  return IdealPresentation(vars, std::move(gens), OrderKind::block);
}

}  // namespace fcover
