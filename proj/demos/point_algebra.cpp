// Point algebras: Q[x]/(x^2 - q) for a few q, and the odd nilpotent in an exterior algebra.
#include <iostream>

#include "fcover/fcover.hpp"

using namespace fcover;

int main() {
  for (long q : {1, 0, -1, 2, 4}) {
    PointAlgebra a(2, {{1, 0}, {0, 1}, {0, 1}, {Rational(q), 0}}, {1, 0});
    auto rep = orthogonal_idempotents(a);
    std::cout << "Q[x]/(x^2 - " << q << "): det trace form = " << determinant(trace_form(a))
              << ", local factors = " << rep.local_factor_count;
    if (rep.idempotents)
      for (const auto& e : *rep.idempotents) std::cout << "  idempotent " << point_to_string(e);
    std::cout << "\n";
  }

  auto ext = exterior_algebra(2);
  Vector delta{0, 1, 1, 0};
  auto w = odd_nilpotent_witness(ext, delta);
  std::cout << "exterior algebra, D = " << point_to_string(delta) << ": D' = " << point_to_string(w.delta_prime)
            << ", N = " << point_to_string(w.n) << "\n";
}
