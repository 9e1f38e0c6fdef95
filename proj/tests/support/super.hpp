#pragma once

#include <optional>

#include "fcover/fcover.hpp"
#include "random.hpp"

namespace fcover::testing {

// Lambda(th1, th2) x B with B one of 0, Q, Q[x]/(x^2 - c): dimension 4, 5 or 6. The
// Frobenius functional vanishes on odd classes, so the pairing is even like a Poincare
// form. nullopt when the random functional makes it degenerate.
inline std::optional<SuperFrobeniusAlgebra> random_super(Gen& gen) {
  auto ext = exterior_algebra(2);
  const std::size_t k = gen.below(3);
  const std::size_t d = 4 + k;
  Rational c = gen.small_rational();

  std::vector<Parity> par(ext.parity());
  par.resize(d, Parity::even);
  std::vector<Vector> table(d * d, Vector(d));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t i = 0; i < 4; ++i) table[a * d + b][i] = ext.product(a, b)[i];
  if (k == 1) table[4 * d + 4][4] = 1;
  if (k == 2) {
    table[4 * d + 4][4] = 1;  // 1' 1' = 1'
    table[4 * d + 5][5] = 1;  // 1' x = x
    table[5 * d + 4][5] = 1;
    table[5 * d + 5][4] = c;  // x x = c 1'
  }
  Vector unit(d), lambda(d);
  unit[0] = 1;
  if (k > 0) unit[4] = 1;
  lambda[0] = gen.small_rational();
  lambda[3] = gen.small_rational();
  for (std::size_t i = 4; i < d; ++i) lambda[i] = gen.small_rational();
  try {
    return SuperFrobeniusAlgebra::from_frobenius_form(par, table, unit, lambda);
  } catch (const InvariantViolation&) {
    return std::nullopt;
  }
}

// Exterior algebra on one or two generators with a random even functional.
inline std::optional<SuperFrobeniusAlgebra> random_exterior(Gen& gen) {
  auto base = exterior_algebra(1 + static_cast<unsigned>(gen.below(2)));
  const std::size_t d = base.dim();
  std::vector<Vector> table;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) table.push_back(base.product(a, b));
  Vector lambda(d);
  for (std::size_t i = 0; i < d; ++i)
    if (base.parity()[i] == Parity::even) lambda[i] = gen.small_rational();
  try {
    return SuperFrobeniusAlgebra::from_frobenius_form(base.parity(), table, base.unit(), lambda);
  } catch (const InvariantViolation&) {
    return std::nullopt;
  }
}

}  // namespace fcover::testing
