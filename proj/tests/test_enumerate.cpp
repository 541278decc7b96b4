#include <doctest.h>

#include "tropval/axioms.hpp"
#include "tropval/enumerate.hpp"
#include "tropval/fixtures.hpp"

using namespace tropval;

TEST_CASE("subset enumeration on M4") {
  auto e = enumerate_subsets(fixtures::m4());
  CHECK(e.primes.size() == 4);  // {0}, {0,a}, {0,b}, {0,a,b}
  // proper CMC-subsemirings: {0,1}, {0,a,1}, {0,1,b}?, ...: verified count
  for (const auto& w : e.cmc_subsemirings) {
    CHECK(w.proper);
    CHECK(w.cls == SubsetClass::CmcSubsemiring);
  }
  CHECK(!e.cmc_subsemirings.empty());
  // M4 has only the unit 1, so no true generalized CMC-subsets
  CHECK(e.prime_subsets.empty());
  CHECK(e.cmc_subsets.empty());
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(enumerate_subsets(std::make_shared<RatFuncField>()), PreconditionError);
}

TEST_CASE("exhaustive small semirings all verify") {
  for (int n = 2; n <= 4; ++n) {
    auto all = enumerate_semirings(n);
    for (const auto& s : all) {
      INFO(s->name());
      CHECK(verify_semiring(*s).ok());
    }
  }
  CHECK(enumerate_semirings(2).size() == 2);  // booleans and Z/2
}

TEST_CASE("bipotent enumeration: every table is bipotent, and distinct") {
  auto all = enumerate_bipotent(4);
  CHECK(!all.empty());
  for (const auto& s : all) {
    CHECK(verify_semiring(*s).ok());
    CHECK(try_as_bipotent(s, nullptr).has_value());
  }
  // the fixtures of this repository occur in the enumeration up to iso
  std::vector<std::string> keys;
  for (const auto& s : all) keys.push_back(canonical_key(*s));
  CHECK(std::find(keys.begin(), keys.end(), canonical_key(*fixtures::m4())) != keys.end());
  auto all3 = enumerate_bipotent(3);
  std::vector<std::string> keys3;
  for (const auto& s : all3) keys3.push_back(canonical_key(*s));
  CHECK(std::find(keys3.begin(), keys3.end(), canonical_key(*fixtures::nil3())) != keys3.end());
  CHECK(std::find(keys3.begin(), keys3.end(), canonical_key(*fixtures::chain3())) != keys3.end());
}

TEST_CASE("the booleans are the only cancellative bipotent semiring up to size 4") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& s : enumerate_bipotent(n)) {
      auto v = as_bipotent(s);
      if (is_cancellative(v)) CHECK(canonical_key(*s) == canonical_key(*fixtures::boolean()));
    }
}

TEST_CASE("random semiring corpus is deterministic and large enough") {
  auto a = random_semirings(200, 5, kDefaultSeed);
  auto b = random_semirings(200, 5, kDefaultSeed);
  REQUIRE(a.size() >= 200);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i]->name() == b[i]->name());
  for (const auto& s : a) {
    CHECK(s->size() <= 5);
    CHECK(verify_semiring(*s).ok());
  }
  // pairwise non-isomorphic
  std::set<std::string> keys;
  for (const auto& s : a) CHECK(keys.insert(canonical_key(*s)).second);
}

TEST_CASE("homomorphism enumeration") {
  auto homs = enumerate_homomorphisms(fixtures::chain3(), fixtures::boolean());
  CHECK(homs.size() == 1);  // b must go to 1
  CHECK(homs[0].target->is_one(homs[0](FinIdx{2})));
  auto none = enumerate_homomorphisms(fixtures::nil3(), fixtures::chain3());
  for (const auto& h : none) {
    // eps^2 = 0 forces eps -> 0 in any homomorphic image without nilpotents
    CHECK(h.target->is_zero(h(FinIdx{1})));
  }
}
