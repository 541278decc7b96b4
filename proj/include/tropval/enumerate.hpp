#pragma once

#include "tropval/valuation.hpp"

namespace tropval {

struct SubsetEnumeration {
  std::vector<SubsetWitness> primes;
  std::vector<SubsetWitness> cmc_subsemirings;  // proper ones only
  std::vector<SubsetWitness> prime_subsets;     // true prime subsets
  std::vector<SubsetWitness> cmc_subsets;       // true CMC-subsets
};

/// Classifies all 2^n subsets of a finite carrier. Carriers with more than 16
/// elements are refused unless `force` is set.
SubsetEnumeration enumerate_subsets(const CarrierPtr& c, bool force = false);

/// All bipotent semirings with n elements over the fixed chain
/// 0 < x1 < ... < x_{n-1} (addition = max), one table per choice of unit
/// position and admissible multiplication.
std::vector<FiniteSemiringPtr> enumerate_bipotent(int n);

/// All commutative semirings with n elements (n <= 4), deduplicated up to
/// isomorphism; the unit is at index 1 by normalization.
std::vector<FiniteSemiringPtr> enumerate_semirings(int n);

/// Deterministic pseudo-random selection of `count` pairwise non-isomorphic
/// commutative semirings of size <= max_size. The pool combines the
/// exhaustive tables up to size 4, the bipotent enumeration at size 5,
/// modular arithmetic and saturating-arithmetic families, and unital
/// subsemirings of small products.
std::vector<FiniteSemiringPtr> random_semirings(std::size_t count, int max_size,
                                                std::uint64_t seed);

/// All semiring homomorphisms src -> dst (maps fixing 0 and 1).
std::vector<MultMap> enumerate_homomorphisms(const FiniteSemiringPtr& src,
                                             const FiniteSemiringPtr& dst);

/// Canonical form of a finite semiring under relabeling; equal strings mean
/// isomorphic tables.
std::string canonical_key(const FiniteSemiring& s);

}  // namespace tropval
