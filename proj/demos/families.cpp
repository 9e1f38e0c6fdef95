// Walks through the two example families: stability of J, instability of sqrt(J),
// the multiplication read off J, and the fiber algebra at a point.
#include <iostream>

#include "fcover/fcover.hpp"

using namespace fcover;

static void show_family(const std::string& title, const IdealPresentation& j, const IdealPresentation& radical) {
  const auto& vars = j.vars();
  const std::size_t n = vars.dim();
  std::cout << "== " << title << "\n";
  for (const auto& g : j.generators()) std::cout << "  J: " << g << "\n";

  auto st = ideal_poisson_stable(j);
  std::cout << "  J Poisson stable: " << (st.stable ? "yes" : "no") << "\n";
  auto rs = ideal_poisson_stable(radical);
  std::cout << "  sqrt(J) Poisson stable: " << (rs.stable ? "yes" : "no, " + rs.witness->to_string()) << "\n";
  std::cout << "  stated radical certified: " << (verify_stated_radical(j, radical).certified() ? "yes" : "no") << "\n";

  auto m = multiplication_from_ideal(j, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      std::cout << "  d" << a + 1 << " o d" << b + 1 << " = " << m.product(a, b).to_string() << "\n";
  auto v = is_f_manifold(m, Route::both);
  std::cout << "  F-manifold (both routes): " << (v.f_manifold ? "yes" : "no") << "\n";

  auto t0 = default_sample_points(n, 1, 7).front();
  auto alg = fiber_algebra(j, t0, n);
  auto nr = nilradical(alg);
  std::cout << "  fiber at " << point_to_string(t0) << ": nilradical powers";
  for (auto d : nr.power_dimensions) std::cout << " " << d;
  std::cout << "\n";
}

int main() {
  VariableSet v3(3);
  std::vector<Polynomial> rho{Polynomial::constant(v3, 1), parse_poly("t3", v3), Polynomial(v3)};
  show_family("family 1, n = 3, rho = (1, t3, 0)", family1(v3, rho), family1_radical(v3, rho));

  for (std::size_t n : {3, 4, 5}) {
    VariableSet v(n);
    show_family("family 2, n = " + std::to_string(n), family2(v), family2_radical(v));
  }
}
