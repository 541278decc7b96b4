#include "tropval/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <functional>
#include <random>
#include <sstream>

namespace tropval {

SubsetEnumeration enumerate_subsets(const CarrierPtr& c, bool force) {
  if (!c->finite()) throw PreconditionError("enumerate_subsets: finite carriers only");
  const int n = static_cast<int>(c->size());
  if (n > 16 && !force)
    throw PreconditionError("enumerate_subsets: carrier has more than 16 elements (use force)");
  SubsetEnumeration out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    SubsetWitness w = classify_subset(Subset::of_bits(c, std::move(bits)));
    switch (w.cls) {
      case SubsetClass::Prime: out.primes.push_back(std::move(w)); break;
      case SubsetClass::CmcSubsemiring:
        if (w.proper) out.cmc_subsemirings.push_back(std::move(w));
        break;
      case SubsetClass::PrimeSubset: out.prime_subsets.push_back(std::move(w)); break;
      case SubsetClass::CmcSubset: out.cmc_subsets.push_back(std::move(w)); break;
      default: break;
    }
  }
  return out;
}

namespace {

struct RawTables {
  int n, zero, one;
  std::vector<int> add, mul;
  int at(const std::vector<int>& t, int i, int j) const {
    return t[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
  bool valid() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (at(add, i, j) != at(add, j, i)) return false;
        if (at(mul, i, j) != at(mul, j, i)) return false;
      }
    for (int i = 0; i < n; ++i) {
      if (at(add, i, zero) != i) return false;
      if (at(mul, i, zero) != zero) return false;
      if (at(mul, i, one) != i) return false;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (at(add, at(add, i, j), k) != at(add, i, at(add, j, k))) return false;
          if (at(mul, at(mul, i, j), k) != at(mul, i, at(mul, j, k))) return false;
          if (at(mul, i, at(add, j, k)) != at(add, at(mul, i, j), at(mul, i, k))) return false;
        }
    return true;
  }
  FiniteSemiringPtr materialize(const std::string& name) const {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
      if (i == zero) names.push_back("0");
      else if (i == one) names.push_back("1");
      else names.push_back("x" + std::to_string(i));
    }
    return std::make_shared<FiniteSemiring>(name, std::move(names), zero, one, add, mul);
  }
};

}  // namespace

std::string canonical_key(const FiniteSemiring& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    // perm[i] = new label of old element i
    std::string key;
    key.reserve(static_cast<std::size_t>(2 * n * n + 4));
    key += static_cast<char>('a' + perm[static_cast<std::size_t>(s.zero_index())]);
    key += static_cast<char>('a' + perm[static_cast<std::size_t>(s.one_index())]);
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        key += static_cast<char>(
            'a' + perm[static_cast<std::size_t>(s.addi(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]))]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        key += static_cast<char>(
            'a' + perm[static_cast<std::size_t>(s.muli(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]))]);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

std::vector<FiniteSemiringPtr> enumerate_bipotent(int n) {
  if (n < 2 || n > 6) throw PreconditionError("enumerate_bipotent: supported sizes are 2..6");
  std::vector<FiniteSemiringPtr> out;
  RawTables t;
  t.n = n;
  t.zero = 0;
  t.add.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.add[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = std::max(i, j);

  for (int one = 1; one < n; ++one) {
    t.one = one;
    // free entries: unordered pairs of elements that are neither 0 nor 1
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 1; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (i != one && j != one) free_pos.push_back({i, j});
    std::vector<int> digits(free_pos.size(), 0);
    while (true) {
      t.mul.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
      auto set = [&](int i, int j, int v) {
        t.mul[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = v;
        t.mul[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = v;
      };
      for (int i = 0; i < n; ++i) set(i, one, i);
      for (std::size_t k = 0; k < free_pos.size(); ++k) set(free_pos[k].first, free_pos[k].second, digits[k]);
      if (t.valid())
        out.push_back(t.materialize("bip" + std::to_string(n) + "_" + std::to_string(out.size())));
      std::size_t i = 0;
      for (; i < digits.size(); ++i) {
        if (++digits[i] < n) break;
        digits[i] = 0;
      }
      if (i == digits.size()) break;
    }
  }
  return out;
}

std::vector<FiniteSemiringPtr> enumerate_semirings(int n) {
  if (n < 2 || n > 4) throw PreconditionError("enumerate_semirings: exhaustive only up to size 4");
  std::vector<FiniteSemiringPtr> out;
  std::map<std::string, bool> seen;
  RawTables t;
  t.n = n;
  t.zero = 0;
  t.one = 1;
  std::vector<std::pair<int, int>> add_pos, mul_pos;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) add_pos.push_back({i, j});
  for (int i = 2; i < n; ++i)
    for (int j = i; j < n; ++j) mul_pos.push_back({i, j});

  std::vector<int> ad(add_pos.size(), 0);
  while (true) {
    t.add.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto seta = [&](int i, int j, int v) {
      t.add[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = v;
      t.add[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = v;
    };
    for (int i = 0; i < n; ++i) seta(0, i, i);
    for (std::size_t k = 0; k < add_pos.size(); ++k) seta(add_pos[k].first, add_pos[k].second, ad[k]);

    std::vector<int> md(mul_pos.size(), 0);
    while (true) {
      t.mul.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
      auto setm = [&](int i, int j, int v) {
        t.mul[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = v;
        t.mul[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = v;
      };
      for (int i = 0; i < n; ++i) {
        setm(0, i, 0);
        setm(1, i, i);
      }
      setm(0, 1, 0);
      for (std::size_t k = 0; k < mul_pos.size(); ++k) setm(mul_pos[k].first, mul_pos[k].second, md[k]);
      if (t.valid()) {
        auto s = t.materialize("sr" + std::to_string(n) + "_" + std::to_string(out.size()));
        std::string key = canonical_key(*s);
        if (!seen.count(key)) {
          seen[key] = true;
          out.push_back(std::move(s));
        }
      }
      std::size_t i = 0;
      for (; i < md.size(); ++i) {
        if (++md[i] < n) break;
        md[i] = 0;
      }
      if (i == md.size()) break;
    }
    std::size_t i = 0;
    for (; i < ad.size(); ++i) {
      if (++ad[i] < n) break;
      ad[i] = 0;
    }
    if (i == ad.size()) break;
  }
  return out;
}

namespace {

FiniteSemiringPtr modular_ring(int n) {
  RawTables t;
  t.n = n;
  t.zero = 0;
  t.one = 1;
  t.add.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  t.mul.resize(t.add.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t.add[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = (i + j) % n;
      t.mul[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = (i * j) % n;
    }
  return t.materialize("z" + std::to_string(n));
}

FiniteSemiringPtr saturating_naturals(int top) {
  const int n = top + 1;
  RawTables t;
  t.n = n;
  t.zero = 0;
  t.one = 1;
  t.add.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  t.mul.resize(t.add.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t.add[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = std::min(i + j, top);
      t.mul[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = std::min(i * j, top);
    }
  return t.materialize("nsat" + std::to_string(top));
}

/// Product semiring A x B; sizes multiply.
FiniteSemiringPtr product(const FiniteSemiring& a, const FiniteSemiring& b) {
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  const int n = na * nb;
  auto id = [&](int i, int j) { return i * nb + j; };
  RawTables t;
  t.n = n;
  t.zero = id(a.zero_index(), b.zero_index());
  t.one = id(a.one_index(), b.one_index());
  t.add.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  t.mul.resize(t.add.size());
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          int x = id(i1, j1), y = id(i2, j2);
          t.add[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
              id(a.addi(i1, i2), b.addi(j1, j2));
          t.mul[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
              id(a.muli(i1, i2), b.muli(j1, j2));
        }
  return t.materialize(a.name() + "x" + b.name());
}

/// Quotient by the congruence generated by identifying a and b; null when the
/// quotient is smaller than 2 elements.
FiniteSemiringPtr congruence_quotient(const FiniteSemiring& s, int a, int b) {
  const int n = static_cast<int>(s.size());
  std::vector<int> cls(static_cast<std::size_t>(n));
  std::iota(cls.begin(), cls.end(), 0);
  std::function<int(int)> root = [&](int x) { return cls[static_cast<std::size_t>(x)] == x ? x : cls[static_cast<std::size_t>(x)] = root(cls[static_cast<std::size_t>(x)]); };
  auto unite = [&](int x, int y) {
    x = root(x);
    y = root(y);
    if (x == y) return false;
    cls[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    return true;
  };
  unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (root(x) != root(y)) continue;
        for (int z = 0; z < n; ++z) {
          if (unite(s.addi(x, z), s.addi(y, z))) changed = true;
          if (unite(s.muli(x, z), s.muli(y, z))) changed = true;
        }
      }
  }
  std::vector<int> reps;
  std::vector<int> reindex(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    if (root(i) == i) {
      reindex[static_cast<std::size_t>(i)] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  const int k = static_cast<int>(reps.size());
  if (k < 2) return nullptr;
  auto q = [&](int x) { return reindex[static_cast<std::size_t>(root(x))]; };
  RawTables t;
  t.n = k;
  t.zero = q(s.zero_index());
  t.one = q(s.one_index());
  t.add.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  t.mul.resize(t.add.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      t.add[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
          q(s.addi(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]));
      t.mul[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
          q(s.muli(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]));
    }
  return t.materialize(s.name() + ".q");
}

/// Unital subsemiring generated by {0, 1} and the listed generators; null
/// when it exceeds max_size.
FiniteSemiringPtr generated_subsemiring(const FiniteSemiring& s, std::vector<int> gens,
                                        int max_size) {
  std::vector<int> members{s.zero_index(), s.one_index()};
  auto has = [&](int x) { return std::find(members.begin(), members.end(), x) != members.end(); };
  for (int g : gens)
    if (!has(g)) members.push_back(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur = members;
    for (int x : cur)
      for (int y : cur)
        for (int z : {s.addi(x, y), s.muli(x, y)})
          if (!has(z)) {
            members.push_back(z);
            grew = true;
          }
    if (static_cast<int>(members.size()) > max_size) return nullptr;
  }
  std::sort(members.begin(), members.end());
  const int n = static_cast<int>(members.size());
  if (n < 2) return nullptr;
  auto local = [&](int x) {
    return static_cast<int>(std::find(members.begin(), members.end(), x) - members.begin());
  };
  RawTables t;
  t.n = n;
  t.zero = local(s.zero_index());
  t.one = local(s.one_index());
  t.add.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  t.mul.resize(t.add.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t.add[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
          local(s.addi(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]));
      t.mul[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
          local(s.muli(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]));
    }
  return t.materialize(s.name() + ".sub");
}

const std::vector<FiniteSemiringPtr>& semiring_pool(int max_size) {
  static std::map<int, std::vector<FiniteSemiringPtr>> cache;
  auto it = cache.find(max_size);
  if (it != cache.end()) return it->second;

  std::vector<FiniteSemiringPtr> pool;
  std::map<std::string, bool> seen;
  auto push = [&](const FiniteSemiringPtr& s) {
    if (!s || static_cast<int>(s->size()) > max_size) return;
    std::string key = canonical_key(*s);
    if (seen.count(key)) return;
    seen[key] = true;
    pool.push_back(s);
  };

  for (int n = 2; n <= std::min(4, max_size); ++n)
    for (const auto& s : enumerate_semirings(n)) push(s);
  if (max_size >= 5) {
    for (const auto& s : enumerate_bipotent(5)) push(s);
    push(modular_ring(5));
    push(saturating_naturals(4));
    // unital subsemirings and elementary congruence quotients of products
    std::vector<FiniteSemiringPtr> seeds;
    for (const auto& s : pool) seeds.push_back(s);
    for (std::size_t i = 0; i < seeds.size() && i < 44; ++i)
      for (std::size_t j = i; j < seeds.size() && j < 44; ++j) {
        auto prod = product(*seeds[i], *seeds[j]);
        if (static_cast<int>(prod->size()) > 36) continue;
        if (prod->size() <= 5) push(prod);
        const int m = static_cast<int>(prod->size());
        for (int g = 0; g < m; ++g) {
          push(generated_subsemiring(*prod, {g}, max_size));
          for (int h = g + 1; h < m; ++h)
            push(generated_subsemiring(*prod, {g, h}, max_size));
        }
        for (int a = 0; a < m; ++a)
          for (int b = a + 1; b < m; ++b) {
            auto q = congruence_quotient(*prod, a, b);
            if (q && static_cast<int>(q->size()) <= max_size) push(q);
          }
      }
  }
  return cache.emplace(max_size, std::move(pool)).first->second;
}

}  // namespace

std::vector<FiniteSemiringPtr> random_semirings(std::size_t count, int max_size,
                                                std::uint64_t seed) {
  const auto& pool = semiring_pool(max_size);
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<FiniteSemiringPtr> out;
  for (std::size_t i = 0; i < order.size() && out.size() < count; ++i)
    out.push_back(pool[order[i]]);
  return out;
}

std::vector<MultMap> enumerate_homomorphisms(const FiniteSemiringPtr& src,
                                             const FiniteSemiringPtr& dst) {
  const int n = static_cast<int>(src->size());
  const int m = static_cast<int>(dst->size());
  std::vector<int> free_pos;
  for (int i = 0; i < n; ++i)
    if (i != src->zero_index() && i != src->one_index()) free_pos.push_back(i);
  std::vector<int> map(static_cast<std::size_t>(n));
  map[static_cast<std::size_t>(src->zero_index())] = dst->zero_index();
  map[static_cast<std::size_t>(src->one_index())] = dst->one_index();
  std::vector<MultMap> out;
  std::vector<int> digits(free_pos.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < free_pos.size(); ++i)
      map[static_cast<std::size_t>(free_pos[i])] = digits[i];
    bool hom = true;
    for (int i = 0; i < n && hom; ++i)
      for (int j = 0; j < n && hom; ++j) {
        if (map[static_cast<std::size_t>(src->addi(i, j))] !=
            dst->addi(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]))
          hom = false;
        if (map[static_cast<std::size_t>(src->muli(i, j))] !=
            dst->muli(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]))
          hom = false;
      }
    if (hom) {
      std::vector<Elem> table;
      for (int i = 0; i < n; ++i) table.push_back(FinIdx{map[static_cast<std::size_t>(i)]});
      out.push_back(make_table_map(src, dst, std::move(table), MapKind::Homomorphism,
                                   "hom" + std::to_string(out.size())));
    }
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < m) break;
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace tropval
