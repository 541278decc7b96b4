#pragma once

#include "tropval/bipotent.hpp"

namespace tropval {

enum class SubsetClass { Prime, CmcSubsemiring, PrimeSubset, CmcSubset, Invalid };
std::string to_string(SubsetClass c);

/// A classified distinguished subset: a prime / CMC-subsemiring when additive
/// closure holds outright, a prime subset / CMC-subset when a unit exponent u
/// with u(L+L) <= L exists, INVALID otherwise.
struct SubsetWitness {
  Subset set;
  SubsetClass cls = SubsetClass::Invalid;
  std::vector<Elem> exponents;  // finite carriers: every unit exponent; infinite: as declared
  bool is_true = false;         // admits no exponent 1
  bool proper = false;          // set != carrier
  bool sampled = false;
  std::string why_not_prime, why_not_cmc;  // populated when Invalid

  bool prime_kind() const { return cls == SubsetClass::Prime || cls == SubsetClass::PrimeSubset; }
  bool cmc_kind() const { return cls == SubsetClass::CmcSubsemiring || cls == SubsetClass::CmcSubset; }
};

/// Full classification. Finite carriers scan all units for the exponent set;
/// on the rational-function field the exponents must be declared (unit search
/// in an infinite field is not attempted).
SubsetWitness classify_subset(const Subset& s, const std::vector<Elem>& declared_exponents = {},
                              std::size_t budget = 500, std::uint64_t seed = kDefaultSeed);

/// The quotient construction M(R, L): groups elements by equal colon sets
/// [L:x], ordered by reverse inclusion, addition = max. Returns v_L with kind
/// MValuation when L has exponent 1, Mult01 otherwise. Asserts the total-order
/// dichotomy during construction and that supp(v) = {x : Rx <= L} is a prime
/// ideal. CMC-kind inputs must be proper.
MultMap quotient_valuation(const SubsetWitness& L);

/// (A_v, p_v) = ({v <= 1}, {v < 1}) as subsets of the source. For maps built
/// by quotient_valuation this asserts the identities they satisfy: p_v = p and
/// A_v = [p:p] for primes, A_v = A and p_v = P(A) for CMC kinds.
std::pair<Subset, Subset> valuation_pair(const MultMap& v, std::size_t budget = 500,
                                         std::uint64_t seed = kDefaultSeed);

/// P(A) = {x : exists y not in A with xy in A}; prime(-subset) with every
/// exponent of A. Requires a proper CMC-kind witness.
SubsetWitness central_prime(const SubsetWitness& A, std::size_t budget = 500,
                            std::uint64_t seed = kDefaultSeed);

/// A(p) = [p:p]; CMC(-subset) with every exponent of p. May be improper
/// (flagged via .proper).
SubsetWitness a_of_prime(const SubsetWitness& p, std::size_t budget = 500,
                         std::uint64_t seed = kDefaultSeed);

struct EnvelopeCore {
  SubsetWitness b;  // B_u(L) = union of u^-n L, a CMC-subsemiring containing L
  SubsetWitness q;  // Q_u(L) = intersection of u^n L, a prime contained in L
  bool b_proper = false;
  bool fixpoint = false;  // exponent 1: both sides degenerate to L itself
  Report checks;          // every clause of the envelope/core theorem
};

/// Computes B_u(L) and Q_u(L) and asserts: B is a CMC-subsemiring containing
/// L, Q a prime ideal of B contained in L, v_L dominates v_Q with equal
/// kernels, and when B != R also dominates v_B with equal kernels. For u = 1
/// returns the flagged fixpoint (the hypothesis "L true" is not met).
EnvelopeCore envelope_core(const SubsetWitness& L, const Elem& u, std::size_t budget = 500,
                           std::uint64_t seed = kDefaultSeed);

struct DominanceResult {
  bool holds = false;
  bool sampled = false;
  std::string witness;             // pair violating the implication, when !holds
  std::optional<MultMap> gamma;    // target homomorphism, when holds and v surjective
};

/// v dominates w: v(a) <= v(b) implies w(a) <= w(b) for all a, b of the shared
/// source. Exhaustive on finite sources, sampled otherwise. When dominance
/// holds and v is surjective onto a finite target, extracts gamma with
/// gamma o v = w and asserts it is a semiring homomorphism.
DominanceResult dominates(const MultMap& v, const MultMap& w, std::size_t budget = 2000,
                          std::uint64_t seed = kDefaultSeed);

/// The coarsening v_{R, p_v} of a surjective m-valuation (quotient by the
/// valuation ideal). Asserts v dominates it and that it is equivalent to
/// gamma_v0(target) o v via an order isomorphism.
MultMap v0_coarsening(const MultMap& v);
/// Dual coarsening through A_v; requires the target to be proper.
MultMap v_coarsening(const MultMap& v);

enum class RecognizeKind { V0, V };

struct RecognizeResult {
  bool ok = false;
  std::string violated;  // failed clause + witness
  Subset subset;         // p = {v < 1} resp. A = {v <= 1}
  std::optional<MultMap> iso;  // order isomorphism target -> M(R, subset)
};

/// Decides whether a surjective 0-1-multiplicative map into a bipotent
/// carrier is (equivalent to) a quotient valuation: checks the separation
/// property of the target and the additive rule on the fibres, then
/// reconstructs the subset and the order isomorphism.
RecognizeResult recognize(const MultMap& v, RecognizeKind kind);

/// v(x+y) <= v(u^-1) * max(v(x), v(y)) for an exponent u of the defining
/// subset; exhaustive/sampled.
Report check_exponent_bound(const MultMap& v, const Elem& u,
                            std::size_t budget = 500, std::uint64_t seed = kDefaultSeed);

/// Subadditivity v(a+b) <= v(a) + v(b) into a bipotent target.
Report check_mvaluation(const MultMap& v, std::size_t budget = 500,
                        std::uint64_t seed = kDefaultSeed);

}  // namespace tropval
