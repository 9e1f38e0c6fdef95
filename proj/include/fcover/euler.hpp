#pragma once

#include <string>
#include <vector>

#include "fcover/errors.hpp"
#include "fcover/linalg.hpp"

namespace fcover {

struct Bidegree {
  unsigned p = 0, q = 0;
  bool operator==(const Bidegree&) const = default;
};

/// Hodge bidegrees of a bihomogeneous basis Delta_1..Delta_d of flat fields, and the
/// coefficients r_b of -K_V = c_1 in that basis (nonzero only where p_b = q_b = 1).
class GradingData {
 public:
  GradingData(std::vector<Bidegree> bidegrees, Vector r) : bidegrees_(std::move(bidegrees)), r_(std::move(r)) {
    if (bidegrees_.empty()) throw std::invalid_argument("grading data needs at least one basis element");
    if (r_.size() != bidegrees_.size()) throw DimensionMismatch("r must have one entry per basis element");
    for (std::size_t b = 0; b < r_.size(); ++b)
      if (r_[b] != 0 && !(bidegrees_[b] == Bidegree{1, 1}))
        throw std::invalid_argument("r_" + std::to_string(b + 1) + " is nonzero but the class is not of type (1,1)");
  }

  std::size_t dim() const noexcept { return bidegrees_.size(); }
  const std::vector<Bidegree>& bidegrees() const noexcept { return bidegrees_; }
  const Vector& anticanonical() const noexcept { return r_; }

  bool hodge_tate() const {
    for (const auto& b : bidegrees_)
      if (b.p != b.q) return false;
    return true;
  }

 private:
  std::vector<Bidegree> bidegrees_;
  Vector r_;
};

/// Affine vector field sum_a phi_a(x) Delta_a in flat coordinates, phi = linear * x + constant.
struct EulerField {
  Matrix linear;
  Vector constant;
  Rational weight = 1;

  std::size_t dim() const noexcept { return constant.size(); }
  bool is_zero() const { return linear.is_zero() && fcover::is_zero(constant); }

  // "x1*D1 - D2 + (-x3 + 2)*D3"; "0" for the zero field.
  std::string to_string() const {
    std::string out;
    for (std::size_t a = 0; a < dim(); ++a) {
      std::string comp;
      std::size_t terms = 0;
      auto append = [&](const Rational& c, const std::string& mono) {
        if (c == 0) return;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        comp += comp.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mono.empty())
          comp += mag.get_str();
        else
          comp += (mag == 1 ? std::string() : mag.get_str() + "*") + mono;
        ++terms;
      };
      for (std::size_t b = 0; b < dim(); ++b) append(linear(a, b), "x" + std::to_string(b + 1));
      append(constant[a], "");
      if (terms == 0) continue;
      std::string field = "D" + std::to_string(a + 1);
      bool neg = comp[0] == '-';
      if (terms > 1)
        comp = "(" + comp + ")*" + field;
      else if (comp == "1" || comp == "-1")
        comp = (neg ? "-" : "") + field;
      else
        comp += "*" + field;
      if (out.empty())
        out = comp;
      else if (terms == 1 && neg)
        out += " - " + comp.substr(1);
      else
        out += " + " + comp;
    }
    return out.empty() ? "0" : out;
  }
};

// [X, Y] = (B A - A B) x + (B a - A b) for X = A x + a, Y = B x + b.
inline EulerField lie_bracket(const EulerField& x, const EulerField& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("Euler fields of different dimension");
  EulerField r;
  r.linear = y.linear * x.linear - x.linear * y.linear;
  r.constant = y.linear * x.constant;
  auto ab = x.linear * y.constant;
  for (std::size_t i = 0; i < r.constant.size(); ++i) r.constant[i] -= ab[i];
  r.weight = 0;
  return r;
}

struct EulerAnalysis {
  EulerField e1, e2;
  EulerField commutator;
  bool proportional = false;
};

/// E1 = sum_a (1 - p_a) x_a Delta_a + sum_{p_b=q_b=1} r_b Delta_b, and E2 with (1 - q_a).
/// Proportionality is rank <= 1 of the 2 x (d^2 + d) coefficient matrix.
inline EulerAnalysis euler_fields(const GradingData& gr) {
  const std::size_t d = gr.dim();
  auto build = [&](bool use_q) {
    EulerField e{Matrix(d, d), Vector(d), 1};
    for (std::size_t a = 0; a < d; ++a) {
      const auto& bd = gr.bidegrees()[a];
      e.linear(a, a) = 1 - static_cast<long>(use_q ? bd.q : bd.p);
      e.constant[a] = gr.anticanonical()[a];
    }
    return e;
  };
  EulerAnalysis out{build(false), build(true), {}, false};
  out.commutator = lie_bracket(out.e1, out.e2);

  Matrix coeffs(2, d * d + d);
  for (std::size_t row = 0; row < 2; ++row) {
    const auto& e = row == 0 ? out.e1 : out.e2;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) coeffs(row, a * d + b) = e.linear(a, b);
      coeffs(row, d * d + a) = e.constant[a];
    }
  }
  out.proportional = rank(coeffs) <= 1;
  return out;
}

}  // namespace fcover
