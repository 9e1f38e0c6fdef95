#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fcover/errors.hpp"
#include "fcover/f_structure.hpp"
#include "fcover/linalg.hpp"
#include "fcover/upoly.hpp"

namespace fcover {

/// Finite-dimensional commutative associative unital algebra over Q, given by structure
/// constants in a fixed basis. All three axioms are checked on construction.
class PointAlgebra {
 public:
  // table[a * d + b] = coordinates of b_a * b_b
  PointAlgebra(std::size_t dim, std::vector<Vector> table, Vector unit)
      : dim_(dim), table_(std::move(table)), unit_(std::move(unit)) {
    if (dim_ == 0) throw std::invalid_argument("algebra of dimension 0");
    if (table_.size() != dim_ * dim_ || unit_.size() != dim_) throw DimensionMismatch("algebra table has wrong shape");
    for (const auto& v : table_)
      if (v.size() != dim_) throw DimensionMismatch("algebra table entry has wrong length");
    validate();
  }

  std::size_t dim() const noexcept { return dim_; }
  const Vector& unit() const noexcept { return unit_; }
  const Vector& product(std::size_t a, std::size_t b) const { return table_.at(a * dim_ + b); }

  Vector basis_vector(std::size_t a) const {
    Vector v(dim_);
    v.at(a) = 1;
    return v;
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector r(dim_);
    for (std::size_t a = 0; a < dim_; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < dim_; ++b) {
        if (y[b] == 0) continue;
        r = axpy(x[a] * y[b], product(a, b), std::move(r));
      }
    }
    return r;
  }

  // Matrix of v -> x v in the fixed basis.
  Matrix multiplication_operator(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      auto col = multiply(x, basis_vector(j));
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  Vector power(const Vector& x, unsigned k) const {
    Vector r = unit_;
    for (unsigned i = 0; i < k; ++i) r = multiply(r, x);
    return r;
  }

 private:
  void validate() const {
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = a + 1; b < dim_; ++b)
        if (product(a, b) != product(b, a)) throw InvariantViolation("algebra table is not commutative");
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b)
        for (std::size_t c = 0; c < dim_; ++c)
          if (multiply(product(a, b), basis_vector(c)) != multiply(basis_vector(a), product(b, c)))
            throw InvariantViolation("algebra table is not associative at (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
    for (std::size_t b = 0; b < dim_; ++b)
      if (multiply(unit_, basis_vector(b)) != basis_vector(b)) throw InvariantViolation("unit does not act as identity");
  }

  std::size_t dim_;
  std::vector<Vector> table_;
  Vector unit_;
};

/// Tangent algebra at t0 from evaluated structure constants, basis d1..dn.
inline PointAlgebra fiber_algebra(const FMultiplication& m, std::span<const Rational> t0) {
  const std::size_t n = m.dim();
  auto at = [&](const Polynomial& p) { return evaluate_base(p, t0).constant_term(); };
  std::vector<Vector> table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = at(m.constant(a, b, c));
      table.push_back(std::move(v));
    }
  Vector unit(n);
  for (std::size_t c = 0; c < n; ++c) unit[c] = at(m.identity()[c]);
  return PointAlgebra(n, std::move(table), std::move(unit));
}

/// K[y]/J(t0) in its standard-monomial basis (1 first).
inline PointAlgebra fiber_algebra(const IdealPresentation& ideal, std::span<const Rational> t0, std::size_t n,
                                  const GroebnerOptions& options = {}) {
  FiberQuotient q(ideal, t0, options);
  if (!q.finite() || q.dimension() != n)
    throw InvariantViolation("fiber at " + point_to_string(t0) + " has dimension " +
                             (q.finite() ? std::to_string(q.dimension()) : std::string("infinity")) + ", expected " +
                             std::to_string(n));
  const std::size_t d = q.dimension();
  std::vector<Vector> table;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) table.push_back(q.coordinates(q.standard_polynomial(a) * q.standard_polynomial(b)));
  Vector unit(d);
  unit[0] = 1;
  return PointAlgebra(d, std::move(table), std::move(unit));
}

// G_ab = tr(L_{b_a b_b})
inline Matrix trace_form(const PointAlgebra& a) {
  const std::size_t d = a.dim();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      auto op = a.multiplication_operator(a.product(i, j));
      Rational tr = 0;
      for (std::size_t k = 0; k < d; ++k) tr += op(k, k);
      g(i, j) = tr;
      g(j, i) = tr;
    }
  return g;
}

inline bool is_semisimple(const PointAlgebra& a) { return determinant(trace_form(a)) != 0; }

struct Nilradical {
  std::vector<Vector> basis;
  std::size_t local_factor_count = 0;          // dim - dim N
  std::vector<std::size_t> power_dimensions;  // dim N, dim N^2, ... ending with 0
};

/// Kernel of the trace form (the nilradical in characteristic zero). Each basis element is
/// checked to vanish after at most ceil(log2 dim) + 1 squarings.
inline Nilradical nilradical(const PointAlgebra& a) {
  Nilradical nr;
  nr.basis = nullspace(trace_form(a));
  nr.local_factor_count = a.dim() - nr.basis.size();

  std::size_t steps = 1;
  while ((std::size_t{1} << (steps - 1)) < a.dim()) ++steps;
  for (const auto& v : nr.basis) {
    Vector x = v;
    bool vanished = is_zero(x);
    for (std::size_t s = 0; s < steps && !vanished; ++s) {
      x = a.multiply(x, x);
      vanished = is_zero(x);
    }
    if (!vanished) throw InternalInconsistency("trace-form kernel element is not nilpotent");
  }

  std::vector<Vector> current = nr.basis;
  for (;;) {
    std::size_t dim = span_dimension(current, a.dim());
    nr.power_dimensions.push_back(dim);
    if (dim == 0 || nr.power_dimensions.size() > a.dim() + 1) break;
    // basis of N^k from the spanning set, then multiply by N
    auto e = rref(Matrix::from_columns(current, a.dim()));
    std::vector<Vector> independent;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) independent.push_back(current[e.pivots[r]]);
    std::vector<Vector> next;
    for (const auto& x : independent)
      for (const auto& y : nr.basis) next.push_back(a.multiply(x, y));
    current = std::move(next);
  }
  return nr;
}

struct IdempotentReport {
  std::size_t local_factor_count = 0;
  // Present when a splitting element with rational eigenvalues was found.
  std::optional<std::vector<Vector>> idempotents;
  std::optional<Vector> splitting_element;
};

// Monic minimal polynomial of x, from the first linear dependency among 1, x, x^2, ...
inline UPoly minimal_polynomial(const PointAlgebra& a, const Vector& x) {
  std::vector<Vector> powers{a.unit()};
  for (;;) {
    Vector next = a.multiply(powers.back(), x);
    auto sol = solve(Matrix::from_columns(powers, a.dim()), next);
    if (sol) {
      std::vector<Rational> c(powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) c[k] = -(*sol)[k];
      c.back() = 1;
      return UPoly(std::move(c));
    }
    powers.push_back(std::move(next));
  }
}

inline Vector evaluate_at(const PointAlgebra& a, const UPoly& p, const Vector& x) {
  Vector r(a.dim());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = axpy(*it, a.unit(), a.multiply(r, x));
  return r;
}

struct IdempotentOptions {
  std::size_t random_candidates = 20;
  std::uint64_t seed = 0;
};

/// Complete system of orthogonal idempotents over Q when a splitting element with rational
/// eigenvalues turns up among the basis vectors, sum (k+1) b_k, and seeded random small
/// combinations; otherwise only the local factor count.
inline IdempotentReport orthogonal_idempotents(const PointAlgebra& a, const IdempotentOptions& opts = {}) {
  IdempotentReport rep;
  rep.local_factor_count = nilradical(a).local_factor_count;
  const std::size_t d = a.dim();

  std::vector<Vector> candidates;
  for (std::size_t k = 0; k < d; ++k) candidates.push_back(a.basis_vector(k));
  {
    Vector ramp(d);
    for (std::size_t k = 0; k < d; ++k) ramp[k] = static_cast<long>(k + 1);
    candidates.push_back(std::move(ramp));
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t r = 0; r < opts.random_candidates; ++r) {
    Vector v(d);
    for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
    candidates.push_back(std::move(v));
  }

  for (const auto& s : candidates) {
    UPoly m = minimal_polynomial(a, s);
    UPoly sq = squarefree_part(m);
    if (static_cast<std::size_t>(sq.degree()) != rep.local_factor_count) continue;
    auto roots = rational_roots(sq);
    if (!roots || roots->size() != rep.local_factor_count) continue;

    std::vector<Vector> idem;
    for (const auto& r : *roots) {
      UPoly local = UPoly::constant(1);
      UPoly rest = m;
      while ((rest % UPoly::x_minus(r)).is_zero()) {
        rest = rest / UPoly::x_minus(r);
        local = local * UPoly::x_minus(r);
      }
      auto eg = extended_gcd(rest, local);  // eg.s * rest = 1 mod local
      idem.push_back(evaluate_at(a, (eg.s * rest) % m, s));
    }

    Vector sum(d);
    for (std::size_t i = 0; i < idem.size(); ++i) {
      sum = axpy(1, idem[i], std::move(sum));
      for (std::size_t j = 0; j < idem.size(); ++j) {
        Vector expected = i == j ? idem[i] : Vector(d);
        if (a.multiply(idem[i], idem[j]) != expected) throw InternalInconsistency("idempotents are not orthogonal");
      }
    }
    if (sum != a.unit()) throw InternalInconsistency("idempotents do not sum to 1");
    rep.idempotents = std::move(idem);
    rep.splitting_element = s;
    return rep;
  }
  return rep;
}

}  // namespace fcover
