#pragma once

#include "tropval/supertropical.hpp"

namespace tropval {

/// A multiplicative equivalence with order-convex classes on a totally
/// ordered supertropical carrier. Finite relations carry the explicit
/// partition; symbolic ones an equivalence test plus a representative map.
struct OcteRelation {
  OrderedSupertropical u;
  std::optional<std::vector<int>> class_of;  // finite: class id per element index
  std::function<bool(const Elem&, const Elem&)> same;
  MapFn rep;  // canonical class representative
  bool degenerate = false;  // at most one nonzero class
  std::size_t class_count = 0;  // finite only
};

struct VerifiedOcte {
  std::optional<OcteRelation> rel;
  Report report;
};

/// Checks that the partition is multiplicative and its classes are convex;
/// also verifies the derived implication ex ~ 0 => x ~ 0.
VerifiedOcte verify_octe(const OrderedSupertropical& u,
                         const std::vector<std::vector<int>>& partition,
                         std::size_t budget = 2000, std::uint64_t seed = kDefaultSeed);

/// Same checks for a relation given by an equivalence test and representative
/// map; sampled on infinite carriers.
VerifiedOcte verify_octe_fn(const OrderedSupertropical& u,
                            std::function<bool(const Elem&, const Elem&)> same, MapFn rep,
                            std::size_t budget = 2000, std::uint64_t seed = kDefaultSeed);

struct OcteQuotient {
  OrderedSupertropical u;
  MultMap pi;
  TransmissionFlags pi_flags;  // all three transmission flags hold
};

/// Quotient by an OCTE relation: classes multiply and add representative-wise
/// and inherit the order. The output is run through the full ordered
/// supertropical verifier, and pi through the transmission checker, before
/// being returned. Single-class relations (the fully degenerate case) are
/// rejected: the quotient would be the zero ring.
OcteQuotient octe_quotient(const OcteRelation& e, std::size_t budget = 2000,
                           std::uint64_t seed = kDefaultSeed);

/// E(a) for an ideal a of U: x ~ y iff x = y or both ex and ey lie below the
/// ghost image of the ideal. Checks that a is an ideal first. Degenerate
/// (single-nonzero-class) results are returned flagged.
OcteRelation ideal_relation(const OrderedSupertropical& u, const Subset& ideal,
                            std::size_t budget = 2000, std::uint64_t seed = kDefaultSeed);

struct FiberRelationResult {
  std::optional<OcteRelation> rel;
  std::string not_octe_witness;  // set when the two fiber conditions fail
};

/// E(U, A, Phi) for an ideal A containing eU and a homomorphic equivalence
/// Phi on eU (diagonal when absent): x ~ y iff x = y or x, y in A with
/// ex ~_Phi ey. Returns the relation iff the two fiber conditions hold:
/// fibers over Phi-collapsed ghosts lie inside A, and every other fiber meets
/// A in an upper set. Condition failures are reported as a value; malformed
/// Phi or A not containing eU raise precondition errors, and the ideal check
/// on A runs once the fiber conditions hold.
FiberRelationResult fiber_relation(const OrderedSupertropical& u, const Subset& A,
                                   const std::optional<std::vector<std::vector<int>>>& phi,
                                   std::size_t budget = 2000, std::uint64_t seed = kDefaultSeed);

}  // namespace tropval
