#pragma once

// Seeded generators for property tests. Raw mt19937_64 output with % keeps every
// sequence identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "fcover/fcover.hpp"

namespace fcover::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }

  Rational small_rational(long range = 3, long max_den = 2) {
    long num = between(-range, range);
    long den = between(1, max_den);
    return make_rational(num, den);
  }

  Rational nonzero_rational(long range = 3, long max_den = 2) {
    for (;;) {
      auto r = small_rational(range, max_den);
      if (r != 0) return r;
    }
  }

  // Random monomial in the given variables with total degree <= max_degree.
  Monomial monomial(const VariableSet& vars, const std::vector<std::size_t>& pool, unsigned max_degree) {
    Monomial m(vars.size());
    unsigned deg = static_cast<unsigned>(below(max_degree + 1));
    for (unsigned k = 0; k < deg && !pool.empty(); ++k) m[pool[below(pool.size())]] += 1;
    return m;
  }

  Polynomial poly(const VariableSet& vars, const std::vector<std::size_t>& pool, unsigned max_degree,
                  std::size_t max_terms) {
    Polynomial p(vars);
    std::size_t terms = below(max_terms + 1);
    for (std::size_t k = 0; k < terms; ++k) p.add_term(monomial(vars, pool, max_degree), small_rational());
    return p;
  }

  Polynomial ty_poly(const VariableSet& vars, unsigned max_degree = 3, std::size_t max_terms = 4) {
    return poly(vars, ty_pool(vars), max_degree, max_terms);
  }

  Polynomial t_poly(const VariableSet& vars, unsigned max_degree = 2, std::size_t max_terms = 3) {
    return poly(vars, t_pool(vars), max_degree, max_terms);
  }

  VectorField field(const VariableSet& vars, unsigned max_degree = 2, std::size_t max_terms = 3) {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < vars.dim(); ++i) c.push_back(t_poly(vars, max_degree, max_terms));
    return VectorField(vars, std::move(c));
  }

  static std::vector<std::size_t> t_pool(const VariableSet& vars) {
    std::vector<std::size_t> p;
    for (std::size_t i = 1; i <= vars.dim(); ++i) p.push_back(vars.t(i));
    return p;
  }
  static std::vector<std::size_t> ty_pool(const VariableSet& vars) {
    std::vector<std::size_t> p;
    for (std::size_t i = 1; i <= vars.dim(); ++i) {
      p.push_back(vars.t(i));
      p.push_back(vars.y(i));
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fcover::testing
