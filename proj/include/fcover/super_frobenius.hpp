#pragma once

#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "fcover/errors.hpp"
#include "fcover/linalg.hpp"

namespace fcover {

enum class Parity { even, odd };

inline int parity_bit(Parity p) { return p == Parity::odd ? 1 : 0; }

/// Z/2-graded algebra with a homogeneous basis, structure constants, unit and a bilinear
/// pairing g. The constructor checks supercommutativity b_a b_b = (-1)^{|a||b|} b_b b_a,
/// parity additivity of the table, the unit, and nondegeneracy of g. Invariance of g under
/// multiplication is checked separately by frobenius_invariance_check.
class SuperFrobeniusAlgebra {
 public:
  SuperFrobeniusAlgebra(std::vector<Parity> parity, std::vector<Vector> table, Matrix pairing, Vector unit)
      : parity_(std::move(parity)), table_(std::move(table)), pairing_(std::move(pairing)), unit_(std::move(unit)) {
    const std::size_t d = dim();
    if (d == 0) throw std::invalid_argument("super algebra of dimension 0");
    if (table_.size() != d * d || unit_.size() != d || pairing_.rows() != d || pairing_.cols() != d)
      throw DimensionMismatch("super algebra data has wrong shape");
    for (const auto& v : table_)
      if (v.size() != d) throw DimensionMismatch("super algebra table entry has wrong length");
    validate();
  }

  /// g(a, b) = lambda(a b) for a linear functional lambda. Such a pairing is automatically
  /// invariant when the table is associative.
  static SuperFrobeniusAlgebra from_frobenius_form(std::vector<Parity> parity, std::vector<Vector> table, Vector unit,
                                                   const Vector& lambda) {
    const std::size_t d = parity.size();
    Matrix g(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        Rational s = 0;
        for (std::size_t k = 0; k < d; ++k) s += lambda.at(k) * table.at(a * d + b).at(k);
        g(a, b) = s;
      }
    return SuperFrobeniusAlgebra(std::move(parity), std::move(table), std::move(g), std::move(unit));
  }

  std::size_t dim() const noexcept { return parity_.size(); }
  const std::vector<Parity>& parity() const noexcept { return parity_; }
  const Vector& unit() const noexcept { return unit_; }
  const Matrix& pairing() const noexcept { return pairing_; }
  const Vector& product(std::size_t a, std::size_t b) const { return table_.at(a * dim() + b); }

  Vector basis_vector(std::size_t a) const {
    Vector v(dim());
    v.at(a) = 1;
    return v;
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector r(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < dim(); ++b)
        if (y[b] != 0) r = axpy(x[a] * y[b], product(a, b), std::move(r));
    }
    return r;
  }

  Rational pair(const Vector& x, const Vector& y) const {
    Rational s = 0;
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b) s += x[a] * pairing_(a, b) * y[b];
    return s;
  }

  bool is_homogeneous(const Vector& x, Parity p) const {
    for (std::size_t a = 0; a < dim(); ++a)
      if (x.at(a) != 0 && parity_[a] != p) return false;
    return true;
  }

 private:
  void validate() const {
    const std::size_t d = dim();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const auto& ab = product(a, b);
        int sign = parity_bit(parity_[a]) & parity_bit(parity_[b]) ? -1 : 1;
        for (std::size_t c = 0; c < d; ++c) {
          if (ab[c] != sign * product(b, a)[c])
            throw InvariantViolation("table is not supercommutative at (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + ")");
          if (ab[c] != 0 && (parity_bit(parity_[a]) ^ parity_bit(parity_[b])) != parity_bit(parity_[c]))
            throw InvariantViolation("table does not respect parity at (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + ")");
        }
      }
    if (!is_homogeneous(unit_, Parity::even)) throw InvariantViolation("unit is not even");
    for (std::size_t b = 0; b < d; ++b)
      if (multiply(unit_, basis_vector(b)) != basis_vector(b)) throw InvariantViolation("unit does not act as identity");
    if (determinant(pairing_) == 0) throw InvariantViolation("pairing is degenerate");
  }

  std::vector<Parity> parity_;
  std::vector<Vector> table_;
  Matrix pairing_;
  Vector unit_;
};

/// Exterior algebra on k odd generators, basis indexed by subsets (bitmask order), with the
/// Poincare-type pairing g(a, b) = coefficient of the top monomial in a b.
inline SuperFrobeniusAlgebra exterior_algebra(unsigned k) {
  const std::size_t d = std::size_t{1} << k;
  std::vector<Parity> parity;
  for (std::size_t s = 0; s < d; ++s) parity.push_back(std::popcount(s) % 2 ? Parity::odd : Parity::even);
  std::vector<Vector> table;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector v(d);
      if ((a & b) == 0) {
        // sign of moving every generator of b past the larger generators of a
        int swaps = 0;
        for (unsigned i = 0; i < k; ++i)
          if (b >> i & 1u) swaps += std::popcount(a >> (i + 1));
        v[a | b] = swaps % 2 ? -1 : 1;
      }
      table.push_back(std::move(v));
    }
  Vector unit(d), lambda(d);
  unit[0] = 1;
  lambda[d - 1] = 1;
  return SuperFrobeniusAlgebra::from_frobenius_form(std::move(parity), std::move(table), std::move(unit), lambda);
}

struct NilpotentWitness {
  Vector delta_prime;  // odd, g(delta, delta') = 1
  Vector n;            // delta o delta': even, g(n, e) = 1, n o n = 0
};

/// For odd delta: delta o delta = 0 by supercommutativity; an odd delta' with
/// g(delta, delta') = 1 exists by nondegeneracy; then N = delta o delta' is even with
/// g(N, e) = 1 and N o N = 0, so the even part has a nonzero nilpotent.
inline NilpotentWitness odd_nilpotent_witness(const SuperFrobeniusAlgebra& a, const Vector& delta) {
  if (delta.size() != a.dim()) throw DimensionMismatch("element has wrong length");
  if (is_zero(delta)) throw std::invalid_argument("delta must be nonzero");
  if (!a.is_homogeneous(delta, Parity::odd)) throw std::invalid_argument("delta must be odd");
  if (!is_zero(a.multiply(delta, delta)))
    throw InvariantViolation("delta o delta != 0 for odd delta; the table is not supercommutative");

  std::optional<Vector> prime;
  for (std::size_t b = 0; b < a.dim() && !prime; ++b) {
    if (a.parity()[b] != Parity::odd) continue;
    Rational g = a.pair(delta, a.basis_vector(b));
    if (g != 0) {
      Vector v(a.dim());
      v[b] = 1 / g;
      prime = std::move(v);
    }
  }
  if (!prime) throw InvariantViolation("no odd delta' pairs nontrivially with delta; the pairing is degenerate on odd classes");

  NilpotentWitness w{*prime, a.multiply(delta, *prime)};
  if (!a.is_homogeneous(w.n, Parity::even)) throw InternalInconsistency("delta o delta' is not even");
  if (a.pair(w.n, a.unit()) != 1) throw InvariantViolation("g(delta o delta', e) != g(delta, delta'); pairing is not invariant");
  if (!is_zero(a.multiply(w.n, w.n))) throw InvariantViolation("(delta o delta')^2 != 0; table is not associative");
  return w;
}

struct InvarianceResult {
  bool invariant = true;
  std::optional<std::array<std::size_t, 3>> triple;  // 1-based (a, b, c) with g(ab, c) != g(a, bc)
};

inline InvarianceResult frobenius_invariance_check(const SuperFrobeniusAlgebra& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto bi = a.basis_vector(i), bj = a.basis_vector(j), bk = a.basis_vector(k);
        if (a.pair(a.multiply(bi, bj), bk) != a.pair(bi, a.multiply(bj, bk)))
          return {false, std::array<std::size_t, 3>{i + 1, j + 1, k + 1}};
      }
  return {};
}

}  // namespace fcover
