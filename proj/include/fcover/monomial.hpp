#pragma once

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fcover/errors.hpp"

namespace fcover {

/// Coordinates of the cotangent space of an n-dimensional base: base coordinates t1..tn,
/// fiber coordinates y1..yn (conjugate to the ti), and one auxiliary variable z reserved
/// for radical-membership queries.
///
/// Storage layout is t1..tn at indices 0..n-1, y1..yn at n..2n-1, z at 2n.
class VariableSet {
 public:
  explicit VariableSet(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("VariableSet needs n >= 1");
  }

  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return 2 * n_ + 1; }

  // 1-based accessors, matching the coordinate names.
  std::size_t t(std::size_t i) const { return check(i), i - 1; }
  std::size_t y(std::size_t i) const { return check(i), n_ + i - 1; }
  std::size_t z() const noexcept { return 2 * n_; }

  bool is_t(std::size_t v) const noexcept { return v < n_; }
  bool is_y(std::size_t v) const noexcept { return v >= n_ && v < 2 * n_; }
  bool is_z(std::size_t v) const noexcept { return v == 2 * n_; }

  std::string name(std::size_t v) const {
    if (v >= size()) throw std::out_of_range("variable index out of range");
    if (is_t(v)) return "t" + std::to_string(v + 1);
    if (is_y(v)) return "y" + std::to_string(v - n_ + 1);
    return "z";
  }

  std::optional<std::size_t> find(std::string_view name) const {
    if (name == "z") return z();
    if (name.size() < 2 || (name[0] != 't' && name[0] != 'y')) return std::nullopt;
    std::size_t i = 0;
    auto digits = name.substr(1);
    if (digits[0] == '0') return std::nullopt;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    if (i < 1 || i > n_) return std::nullopt;
    return name[0] == 't' ? t(i) : y(i);
  }

  bool operator==(const VariableSet&) const = default;

 private:
  void check(std::size_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("coordinate index out of range");
  }

  std::size_t n_;
};

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t v, Exponent power = 1) {
    Monomial m(nvars);
    m.e_.at(v) = power;
    return m;
  }

  std::size_t size() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t v) const { return e_[v]; }
  Exponent& operator[](std::size_t v) { return e_[v]; }
  const std::vector<Exponent>& exponents() const noexcept { return e_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
  }

  bool divides(const Monomial& other) const {
    assert(size() == other.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    assert(size() == other.size());
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
    return r;
  }

  // Exact quotient; other must divide *this.
  Monomial operator/(const Monomial& other) const {
    assert(other.divides(*this));
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> e_;
};

enum class OrderKind { degrevlex, lex, block };

/// Term order on monomials over a VariableSet.
///
/// Variable significance, most to least: y1..yn, t1..tn, z. The block order compares the
/// y-block first (total y-degree, then degrevlex inside the block), then the (t, z) block
/// by degrevlex, so z is always the least significant variable.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr MonomialOrder(OrderKind kind) : kind_(kind) {}  // NOLINT: implicit on purpose

  constexpr OrderKind kind() const noexcept { return kind_; }

  // -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    assert(a.size() == b.size() && a.size() % 2 == 1);
    const std::size_t n = a.size() / 2;
    switch (kind_) {
      case OrderKind::lex:
        for (std::size_t k = 0; k < a.size(); ++k) {
          auto v = by_significance(k, n);
          if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
      case OrderKind::degrevlex:
        return degrevlex(a, b, 0, a.size(), n);
      case OrderKind::block:
        if (int c = degrevlex(a, b, 0, n, n); c != 0) return c;
        return degrevlex(a, b, n, a.size(), n);
    }
    return 0;
  }

  std::string name() const {
    switch (kind_) {
      case OrderKind::degrevlex: return "degrevlex";
      case OrderKind::lex: return "lex";
      case OrderKind::block: return "block";
    }
    return "?";
  }

  constexpr bool operator==(const MonomialOrder&) const = default;

 private:
  // Significance rank k -> storage index.
  static std::size_t by_significance(std::size_t k, std::size_t n) {
    if (k < n) return n + k;
    if (k < 2 * n) return k - n;
    return 2 * n;
  }

  // degrevlex restricted to significance ranks [lo, hi).
  static int degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, std::size_t n) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      auto v = by_significance(k, n);
      da += a[v];
      db += b[v];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = hi; k-- > lo;) {
      auto v = by_significance(k, n);
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::degrevlex;
};

// Map comparator putting larger monomials first, so begin() is the leading term.
struct DescendingTerms {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) > 0; }
};

}  // namespace fcover
