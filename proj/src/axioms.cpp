#include "tropval/axioms.hpp"

#include <random>

namespace tropval {

namespace {

struct TripleSource {
  std::vector<Elem> elems;
  std::vector<std::array<std::size_t, 3>> triples;
  bool exhaustive;
};

TripleSource make_triples(const Carrier& c, std::size_t budget, std::uint64_t seed) {
  TripleSource src;
  if (c.finite()) {
    src.elems = all_elements(c);
    src.exhaustive = true;
    const std::size_t n = src.elems.size();
    src.triples.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) src.triples.push_back({i, j, k});
    return src;
  }
  src.exhaustive = false;
  std::size_t pool = std::max<std::size_t>(16, budget / 8);
  src.elems = c.sample(pool, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<std::size_t> pick(0, src.elems.size() - 1);
  src.triples.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) src.triples.push_back({pick(rng), pick(rng), pick(rng)});
  return src;
}

}  // namespace

Report verify_semiring(const Carrier& c, std::size_t budget, std::uint64_t seed) {
  Report rep;
  auto src = make_triples(c, budget, seed);
  rep.exhaustive = src.exhaustive;
  const auto& es = src.elems;

  auto scan2 = [&](const std::string& name, auto&& law) {
    for (const auto& t : src.triples) {
      const Elem &a = es[t[0]], &b = es[t[1]];
      if (!law(a, b)) {
        rep.add(name, false, "witness (" + c.show(a) + ", " + c.show(b) + ")");
        return;
      }
    }
    rep.add(name, true);
  };
  auto scan3 = [&](const std::string& name, auto&& law) {
    for (const auto& t : src.triples) {
      const Elem &a = es[t[0]], &b = es[t[1]], &x = es[t[2]];
      if (!law(a, b, x)) {
        rep.add(name, false,
                "witness (" + c.show(a) + ", " + c.show(b) + ", " + c.show(x) + ")");
        return;
      }
    }
    rep.add(name, true);
  };
  auto scan1 = [&](const std::string& name, auto&& law) {
    for (const auto& t : src.triples) {
      const Elem& a = es[t[0]];
      if (!law(a)) {
        rep.add(name, false, "witness " + c.show(a));
        return;
      }
    }
    rep.add(name, true);
  };

  scan2("add commutative", [&](const Elem& a, const Elem& b) { return c.eq(c.add(a, b), c.add(b, a)); });
  scan3("add associative", [&](const Elem& a, const Elem& b, const Elem& x) {
    return c.eq(c.add(c.add(a, b), x), c.add(a, c.add(b, x)));
  });
  scan2("mul commutative", [&](const Elem& a, const Elem& b) { return c.eq(c.mul(a, b), c.mul(b, a)); });
  scan3("mul associative", [&](const Elem& a, const Elem& b, const Elem& x) {
    return c.eq(c.mul(c.mul(a, b), x), c.mul(a, c.mul(b, x)));
  });
  scan3("distributive", [&](const Elem& a, const Elem& b, const Elem& x) {
    return c.eq(c.mul(a, c.add(b, x)), c.add(c.mul(a, b), c.mul(a, x)));
  });
  scan1("zero neutral for add", [&](const Elem& a) { return c.eq(c.add(a, c.zero()), a); });
  scan1("zero absorbing for mul", [&](const Elem& a) { return c.is_zero(c.mul(a, c.zero())); });
  scan1("one neutral for mul", [&](const Elem& a) { return c.eq(c.mul(a, c.one()), a); });
  return rep;
}

}  // namespace tropval
