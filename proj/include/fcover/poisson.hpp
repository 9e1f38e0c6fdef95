#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "fcover/groebner.hpp"
#include "fcover/polynomial.hpp"

namespace fcover {

/// Canonical bracket on the cotangent space with ti and yi conjugate:
///
///   {f, g} = sum_i  df/dyi * dg/dti  -  df/dti * dg/dyi
///
/// With this sign the bracket of two fiber-linear functions is the symbol of the Lie
/// bracket of the corresponding vector fields, and {y1, t1} = 1.
inline Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g) {
  if (f.vars() != g.vars()) throw DimensionMismatch("Poisson bracket across VariableSets");
  if (f.uses_z() || g.uses_z()) throw std::invalid_argument("Poisson bracket: input uses the reserved variable z");
  const auto& vars = f.vars();
  Polynomial r(vars, f.order());
  for (std::size_t i = 1; i <= vars.dim(); ++i) {
    auto fy = partial_derivative(f, vars.y(i));
    auto gt = partial_derivative(g, vars.t(i));
    auto ft = partial_derivative(f, vars.t(i));
    auto gy = partial_derivative(g, vars.y(i));
    if (!fy.is_zero() && !gt.is_zero()) r += fy * gt;
    if (!ft.is_zero() && !gy.is_zero()) r -= ft * gy;
  }
  return r;
}

// P_a(b, c) = {a, bc} - {a, b} c - b {a, c}. Identically zero for a Poisson algebra.
inline Polynomial poisson_tensor(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
  return poisson_bracket(a, b * c) - poisson_bracket(a, b) * c - b * poisson_bracket(a, c);
}

struct StabilityWitness {
  std::size_t i, j;  // 0-based generator indices, i < j
  Polynomial first, second;
  Polynomial bracket;

  std::string to_string() const {
    return "{" + first.to_string() + ", " + second.to_string() + "} = " + bracket.to_string();
  }
};

struct StabilityResult {
  bool stable = true;
  std::optional<StabilityWitness> witness;
  GroebnerStats stats;

  explicit operator bool() const noexcept { return stable; }
};

/// An ideal is closed under the bracket iff the brackets of its generators lie in it, so it
/// suffices to test generator pairs. Returns the first failing pair in generator order.
inline StabilityResult ideal_poisson_stable(const IdealPresentation& ideal, const GroebnerOptions& options = {}) {
  for (const auto& g : ideal.generators())
    if (g.uses_z()) throw std::invalid_argument("Poisson stability: generator uses the reserved variable z");
  StabilityResult result;
  if (ideal.size() == 0) return result;
  auto gb = buchberger(ideal, options);
  result.stats = gb.stats();
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Polynomial br = poisson_bracket(gens[i], gens[j]);
      if (!ideal_contains(br, gb)) {
        result.stable = false;
        result.witness = StabilityWitness{i, j, gens[i], gens[j], br};
        return result;
      }
    }
  }
  return result;
}

}  // namespace fcover
