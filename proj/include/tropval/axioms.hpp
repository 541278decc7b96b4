#pragma once

#include "tropval/carrier.hpp"

namespace tropval {

/// Checks the commutative-semiring axioms: commutativity and associativity of
/// both operations, distributivity, additive neutrality of zero, absorption
/// by zero, multiplicative neutrality of one. Exhaustive for finite carriers;
/// for infinite carriers each law is checked on `budget` sampled triples.
Report verify_semiring(const Carrier& c, std::size_t budget = 1000,
                       std::uint64_t seed = kDefaultSeed);

}  // namespace tropval
