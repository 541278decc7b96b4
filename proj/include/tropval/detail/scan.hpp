#pragma once

#include "tropval/carrier.hpp"

#include <random>

namespace tropval::detail {

inline std::vector<Elem> sample_of(const Carrier& c, std::size_t budget, std::uint64_t seed) {
  return c.finite() ? all_elements(c) : c.sample(budget, seed);
}

/// Deterministic pair source: every pair for finite carriers, `budget` seeded
/// pairs over a small sampled pool otherwise.
struct PairPool {
  std::vector<Elem> pool;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool exhaustive = true;
};

inline PairPool make_pairs(const Carrier& c, std::size_t budget, std::uint64_t seed,
                           std::size_t pool_cap = 32) {
  PairPool pp;
  if (c.finite()) {
    pp.pool = all_elements(c);
    for (std::size_t i = 0; i < pp.pool.size(); ++i)
      for (std::size_t j = 0; j < pp.pool.size(); ++j) pp.pairs.push_back({i, j});
    return pp;
  }
  pp.exhaustive = false;
  pp.pool = c.sample(pool_cap, seed);
  std::mt19937_64 rng(seed ^ 0x9a1f5ull);
  std::uniform_int_distribution<std::size_t> pick(0, pp.pool.size() - 1);
  if (pp.pool.size() * pp.pool.size() <= budget) {
    for (std::size_t i = 0; i < pp.pool.size(); ++i)
      for (std::size_t j = 0; j < pp.pool.size(); ++j) pp.pairs.push_back({i, j});
  } else {
    for (std::size_t k = 0; k < budget; ++k) pp.pairs.push_back({pick(rng), pick(rng)});
  }
  return pp;
}

template <typename F>
bool scan_pairs(const PairPool& pp, F&& f, std::string* witness, const Carrier& c) {
  for (const auto& [i, j] : pp.pairs) {
    const Elem &a = pp.pool[i], &b = pp.pool[j];
    if (!f(a, b)) {
      if (witness) *witness = "(" + c.show(a) + ", " + c.show(b) + ")";
      return false;
    }
  }
  return true;
}

/// Triple source built the same way.
struct TriplePool {
  std::vector<Elem> pool;
  std::vector<std::array<std::size_t, 3>> triples;
  bool exhaustive = true;
};

inline TriplePool make_triples(const Carrier& c, std::size_t budget, std::uint64_t seed,
                               std::size_t pool_cap = 24) {
  TriplePool tp;
  if (c.finite()) {
    tp.pool = all_elements(c);
    const std::size_t n = tp.pool.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) tp.triples.push_back({i, j, k});
    return tp;
  }
  tp.exhaustive = false;
  tp.pool = c.sample(pool_cap, seed);
  std::mt19937_64 rng(seed ^ 0x7a1b3ull);
  std::uniform_int_distribution<std::size_t> pick(0, tp.pool.size() - 1);
  for (std::size_t k = 0; k < budget; ++k) tp.triples.push_back({pick(rng), pick(rng), pick(rng)});
  return tp;
}

template <typename F>
bool scan_triples(const TriplePool& tp, F&& f, std::string* witness, const Carrier& c) {
  for (const auto& t : tp.triples) {
    const Elem &a = tp.pool[t[0]], &b = tp.pool[t[1]], &x = tp.pool[t[2]];
    if (!f(a, b, x)) {
      if (witness)
        *witness = "(" + c.show(a) + ", " + c.show(b) + ", " + c.show(x) + ")";
      return false;
    }
  }
  return true;
}

}  // namespace tropval::detail
