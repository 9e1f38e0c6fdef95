#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcover/errors.hpp"
#include "fcover/monomial.hpp"
#include "fcover/rational.hpp"

namespace fcover {

/// Exact polynomial in K[t1..tn, y1..yn, z], K = Q.
///
/// Terms are kept in a map sorted descending under the polynomial's MonomialOrder, with no
/// zero coefficients. The order is a representation choice: arithmetic between polynomials
/// that differ only in order is allowed (the result takes the left operand's order) and
/// equality ignores it.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, DescendingTerms>;

  explicit Polynomial(VariableSet vars, MonomialOrder order = {})
      : vars_(vars), terms_(DescendingTerms{order}) {}

  static Polynomial constant(VariableSet vars, const Rational& c, MonomialOrder order = {}) {
    Polynomial p(vars, order);
    p.add_term(Monomial(vars.size()), c);
    return p;
  }

  static Polynomial variable(VariableSet vars, std::size_t v, MonomialOrder order = {}) {
    Polynomial p(vars, order);
    p.add_term(Monomial::variable(vars.size(), v), 1);
    return p;
  }

  static Polynomial term(VariableSet vars, const Monomial& m, const Rational& c, MonomialOrder order = {}) {
    Polynomial p(vars, order);
    p.add_term(m, c);
    return p;
  }

  const VariableSet& vars() const noexcept { return vars_; }
  MonomialOrder order() const { return terms_.key_comp().order; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Rational constant_term() const {
    auto it = terms_.find(Monomial(vars_.size()));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
  }
  const Rational& leading_coefficient() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  // Max total exponent over the fiber variables.
  std::uint64_t degree_in_y() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, y_degree(m));
    return d;
  }

  std::uint64_t y_degree(const Monomial& m) const {
    std::uint64_t d = 0;
    for (std::size_t i = 1; i <= vars_.dim(); ++i) d += m[vars_.y(i)];
    return d;
  }

  bool uses_variable(std::size_t v) const {
    for (const auto& [m, c] : terms_)
      if (m[v] != 0) return true;
    return false;
  }
  bool uses_y() const {
    for (std::size_t i = 1; i <= vars_.dim(); ++i)
      if (uses_variable(vars_.y(i))) return true;
    return false;
  }
  bool uses_z() const { return uses_variable(vars_.z()); }

  Polynomial with_order(MonomialOrder order) const {
    if (order == this->order()) return *this;
    Polynomial p(vars_, order);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, c);
    return p;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p(*this);
    Rational inv = 1 / leading_coefficient();
    for (auto& [m, c] : p.terms_) c *= inv;
    return p;
  }

  // In-place builders. Values handed to callers are never mutated through these.
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.size() != vars_.size()) throw DimensionMismatch("monomial length does not match VariableSet");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // *this -= c * m * g
  void sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) {
    for (const auto& [gm, gc] : g.terms_) add_term(gm * m, -(c * gc));
  }

  void erase_leading() { terms_.erase(terms_.begin()); }

  Polynomial& operator+=(const Polynomial& o) {
    same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.same_ring(b);
    Polynomial r(a.vars_, a.order());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(vars_, 1, order());
    Polynomial base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
  }

  /// Canonical text: terms descending under the polynomial's order, reduced fractions,
  /// explicit `*` and `^`, variables inside a monomial in storage order (t, y, z).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string mono = monomial_string(m);
      if (mono.empty())
        out += mag.get_str();
      else if (mag == 1)
        out += mono;
      else
        out += mag.get_str() + "*" + mono;
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars_.name(v);
      if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void same_ring(const Polynomial& o) const {
    if (vars_ != o.vars_) throw DimensionMismatch("polynomials over different VariableSets");
  }

  VariableSet vars_;
  Terms terms_;
};

inline Polynomial partial_derivative(const Polynomial& f, std::size_t v) {
  if (v >= f.vars().size()) throw std::out_of_range("derivative variable index out of range");
  Polynomial r(f.vars(), f.order());
  for (const auto& [m, c] : f.terms()) {
    if (m[v] == 0) continue;
    Monomial d(m);
    d[v] -= 1;
    r.add_term(d, c * m[v]);
  }
  return r;
}

/// Substitutes ti -> t0[i-1]; fiber variables and z stay symbolic.
inline Polynomial evaluate_base(const Polynomial& f, std::span<const Rational> t0) {
  const auto& vars = f.vars();
  if (t0.size() != vars.dim()) throw DimensionMismatch("base point has wrong length");
  Polynomial r(vars, f.order());
  for (const auto& [m, c] : f.terms()) {
    Rational value = c;
    Monomial rest(m);
    for (std::size_t i = 0; i < vars.dim(); ++i) {
      for (Monomial::Exponent k = 0; k < m[i]; ++k) value *= t0[i];
      rest[i] = 0;
    }
    r.add_term(rest, value);
  }
  return r;
}

}  // namespace fcover
