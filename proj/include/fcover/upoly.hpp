#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fcover/rational.hpp"

namespace fcover {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static UPoly x_minus(const Rational& r) { return UPoly({-r, Rational(1)}); }
  static UPoly constant(const Rational& r) { return UPoly({r}); }

  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  const Rational& lead() const { return c_.back(); }
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational operator()(const Rational& x) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r(*this);
    Rational inv = 1 / lead();
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] - b[k];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }

  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
    std::vector<Rational> r = a.c_;
    for (long k = static_cast<long>(r.size()) - static_cast<long>(b.c_.size()); k >= 0; --k) {
      Rational f = r[k + b.degree()] / b.lead();
      q[k] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  bool operator==(const UPoly&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct ExtendedGcd {
  UPoly g, s, t;  // s a + t b = g, g monic
};

inline ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0 = UPoly::constant(1), s1, t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  Rational inv = 1 / r0.lead();
  auto scale = UPoly::constant(inv);
  return {r0 * scale, s0 * scale, t0 * scale};
}

// p / gcd(p, p'), monic.
inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

namespace detail {

inline std::optional<std::vector<Integer>> divisors(Integer a, const Integer& limit) {
  if (a < 0) a = -a;
  if (a > limit) return std::nullopt;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Distinct rational roots by the rational root theorem, ascending. nullopt when the
/// coefficients are too large to enumerate divisors.
inline std::optional<std::vector<Rational>> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  // integer primitive form
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> a;
  for (const auto& c : p.coefficients()) a.push_back(Integer(c * den_lcm));
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  const Integer limit("1000000000000");
  auto ps = detail::divisors(a[low], limit);
  auto qs = detail::divisors(a.back(), limit);
  if (!ps || !qs) return std::nullopt;
  for (const auto& num : *ps)
    for (const auto& den : *qs)
      for (int sign : {1, -1}) {
        Rational r = make_rational(sign * num, den);
        if (p(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace fcover
