#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcover/errors.hpp"
#include "fcover/polynomial.hpp"

namespace fcover {

struct GroebnerOptions {
  // Maximum number of S-pairs actually reduced before giving up.
  std::size_t max_pairs = 200000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t zero_reductions = 0;

  GroebnerStats& operator+=(const GroebnerStats& o) {
    pairs_created += o.pairs_created;
    pairs_reduced += o.pairs_reduced;
    coprime_skips += o.coprime_skips;
    chain_skips += o.chain_skips;
    zero_reductions += o.zero_reductions;
    return *this;
  }
};

/// A finite generating set of an ideal together with the term order used to compute with it.
/// Zero generators are dropped on construction.
class IdealPresentation {
 public:
  IdealPresentation(VariableSet vars, std::vector<Polynomial> gens, MonomialOrder order = {})
      : vars_(vars), order_(order) {
    for (auto& g : gens) {
      if (g.vars() != vars) throw DimensionMismatch("generator over a different VariableSet");
      if (!g.is_zero()) gens_.push_back(g.with_order(order));
    }
  }

  const VariableSet& vars() const noexcept { return vars_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  IdealPresentation with_order(MonomialOrder order) const { return IdealPresentation(vars_, gens_, order); }

  IdealPresentation extended(std::span<const Polynomial> extra) const {
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), extra.begin(), extra.end());
    return IdealPresentation(vars_, std::move(g), order_);
  }

 private:
  VariableSet vars_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis: monic, no term of any element divisible by another element's
/// leading monomial, sorted by descending leading monomial. Unique for (ideal, order).
class GroebnerBasis {
 public:
  GroebnerBasis(VariableSet vars, MonomialOrder order, std::vector<Polynomial> basis, GroebnerStats stats = {})
      : vars_(vars), order_(order), basis_(std::move(basis)), stats_(stats) {}

  const VariableSet& vars() const noexcept { return vars_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const GroebnerStats& stats() const noexcept { return stats_; }

  bool is_unit_ideal() const { return basis_.size() == 1 && basis_.front().is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.basis_ == b.basis_;
  }

 private:
  VariableSet vars_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  GroebnerStats stats_;
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  Polynomial a = f.with_order(order), b = g.with_order(order);
  const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  Polynomial s(a.vars(), order);
  s.sub_scaled(-1 / a.leading_coefficient(), l / a.leading_monomial(), a);
  s.sub_scaled(1 / b.leading_coefficient(), l / b.leading_monomial(), b);
  return s;
}

/// Full multivariate division remainder of f by the divisors, in the divisors' order.
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order) {
  Polynomial p = f.with_order(order);
  Polynomial r(f.vars(), order);
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lm)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      p.sub_scaled(lc / hit->leading_coefficient(), lm / hit->leading_monomial(), *hit);
    } else {
      r.add_term(lm, lc);
      p.erase_leading();
    }
  }
  return r;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.vars() != gb.vars()) throw DimensionMismatch("normal form across VariableSets");
  return reduce(f, gb.basis(), gb.order());
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

// Deterministic selection: smallest lcm first (normal strategy), ties by (j, i).
struct PairQueueOrder {
  MonomialOrder order;
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, MonomialOrder order) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce(minimal[i], others, order).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

}  // namespace detail

/// Buchberger's algorithm with the coprime-leading-monomial criterion and the chain
/// criterion. Returns the reduced basis; throws BudgetExceeded past options.max_pairs.
inline GroebnerBasis buchberger(const IdealPresentation& ideal, const GroebnerOptions& options = {}) {
  if (ideal.size() == 0) throw std::invalid_argument("Groebner basis of an empty generator list");
  const auto vars = ideal.vars();
  const auto order = ideal.order();
  GroebnerStats stats;

  std::vector<Polynomial> g;
  std::set<detail::CriticalPair, detail::PairQueueOrder> queue(detail::PairQueueOrder{order});
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto unit = [&] {
    return GroebnerBasis(vars, order, {Polynomial::constant(vars, 1, order)}, stats);
  };

  auto insert = [&](Polynomial h) {
    std::size_t k = g.size();
    g.push_back(h.monic());
    for (std::size_t i = 0; i < k; ++i) {
      queue.insert({i, k, lcm(g[i].leading_monomial(), g[k].leading_monomial())});
      pending.emplace(i, k);
      ++stats.pairs_created;
    }
  };

  for (const auto& gen : ideal.generators()) {
    if (gen.is_constant()) return unit();
    insert(gen);
  }

  while (!queue.empty()) {
    auto pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    const auto& fi = g[pair.i];
    const auto& fj = g[pair.j];
    if (coprime(fi.leading_monomial(), fj.leading_monomial())) {
      ++stats.coprime_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!g[k].leading_monomial().divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(pair.i, k)) && !pending.count(key(pair.j, k))) chain = true;
    }
    if (chain) {
      ++stats.chain_skips;
      continue;
    }

    if (++stats.pairs_reduced > options.max_pairs)
      throw BudgetExceeded("Groebner budget of " + std::to_string(options.max_pairs) + " pairs exceeded");

    Polynomial h = reduce(s_polynomial(fi, fj, order), g, order);
    if (h.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    if (h.is_constant()) return unit();
    insert(std::move(h));
  }

  return GroebnerBasis(vars, order, detail::reduce_basis(std::move(g), order), stats);
}

inline bool ideal_contains(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

/// Checks Buchberger's criterion exhaustively: every S-polynomial reduces to zero.
inline bool is_groebner_basis(const GroebnerBasis& gb) {
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!normal_form(s_polynomial(b[i], b[j], gb.order()), gb).is_zero()) return false;
  return true;
}

/// Rabinowitsch: f lies in the radical iff 1 lies in (gens, 1 - z f) in the ring with z.
inline bool radical_contains(const Polynomial& f, const IdealPresentation& gens, const GroebnerOptions& options = {}) {
  if (f.vars() != gens.vars()) throw DimensionMismatch("radical membership across VariableSets");
  const auto& vars = gens.vars();
  if (f.uses_z()) throw std::invalid_argument("radical membership: f uses the reserved variable z");
  for (const auto& g : gens.generators())
    if (g.uses_z()) throw std::invalid_argument("radical membership: generator uses the reserved variable z");
  if (f.is_zero()) return true;
  Polynomial rab = Polynomial::constant(vars, 1) - Polynomial::variable(vars, vars.z()) * f;
  return buchberger(gens.extended(std::span(&rab, 1)), options).is_unit_ideal();
}

/// Equality of ideals via their reduced bases under a's order.
inline bool ideal_equals(const IdealPresentation& a, const IdealPresentation& b, const GroebnerOptions& options = {}) {
  if (a.vars() != b.vars()) throw DimensionMismatch("ideal comparison across VariableSets");
  auto ga = buchberger(a, options);
  auto gb = buchberger(b.with_order(a.order()), options);
  return ga.basis() == gb.basis();
}

}  // namespace fcover
