#pragma once

#include "tropval/multmap.hpp"

namespace tropval {

/// A carrier seen as a bipotent semiring: x + y is always one of x, y, so
/// x <= y iff x + y = y is a total order with 0 least and multiplication
/// order-compatible. Finite carriers store the derived chain; infinite ones
/// use the carrier's native order.
struct BipotentView {
  CarrierPtr c;
  std::optional<std::vector<int>> rank_of;  // finite: rank_of[index] = chain position
  std::optional<std::vector<int>> chain;    // finite: chain[position] = element index
  bool sampled = false;                     // bipotence checked on a sample only

  bool leq(const Elem& a, const Elem& b) const;
  bool lt(const Elem& a, const Elem& b) const { return leq(a, b) && !c->eq(a, b); }
  Elem max(const Elem& a, const Elem& b) const { return leq(a, b) ? b : a; }
};

struct NonBipotentError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Bipotent view of a carrier, or a witness-carrying error for a pair with
/// x + y not in {x, y}. The carrier is expected to pass verify_semiring.
BipotentView as_bipotent(CarrierPtr c, std::size_t budget = 1000, std::uint64_t seed = kDefaultSeed);
/// Non-throwing variant; on failure returns the witness text.
std::optional<BipotentView> try_as_bipotent(CarrierPtr c, std::string* witness,
                                            std::size_t budget = 1000,
                                            std::uint64_t seed = kDefaultSeed);

/// Nilradical {x : x^n = 0 for some n}; asserts it is a lower set and a prime
/// ideal before returning.
Subset nilradical(const BipotentView& m);

/// Quotient by the minimal cancellative relation: x ~ y iff both are
/// nilpotent or s x = s y for some non-nilpotent s.
struct CancelQuotient {
  BipotentView source;
  std::vector<int> class_of;  // finite sources: class id per element index
  CarrierPtr quotient;
  BipotentView quotient_view;
  MultMap pi;
  bool identity = false;  // quotient is the source itself (already cancellative)
};

/// Requires a finite source, or an infinite carrier that is already
/// cancellative (graded and absolute-value carriers), where the quotient is
/// the identity. Asserts: pi is a surjective homomorphism, the quotient is
/// cancellative, and the kernel equals the nilradical.
CancelQuotient cancellative_quotient(const BipotentView& m);

bool is_cancellative(const BipotentView& m, std::string* witness = nullptr,
                     std::size_t budget = 1000, std::uint64_t seed = kDefaultSeed);

/// Enumerates all semiring homomorphisms gamma from q's source into n with n
/// cancellative and kernel = Nil(source), and verifies each factors through
/// pi in a unique way. Target sizes above `enumeration_cap` fall back to a
/// deterministic sample of candidate maps.
Report check_universal_property(const CancelQuotient& q, const BipotentView& n,
                                std::size_t enumeration_cap = 5);

enum class Theorem28Case { I, II, III, IV, NotApplicable };

struct BipotentClass {
  bool uic = false;
  bool strict_uic = false;
  bool sep_v = false;
  bool sep_v0 = false;
  bool proper = false;
  bool cancellative = false;
  Theorem28Case theorem28_case = Theorem28Case::NotApplicable;
  bool sampled = false;           // graded/absolute carriers: closed form + sampled sanity
  std::string uic_witness;        // pair with no encapsulating unit, when !uic
};

/// Separation/encapsulation classification: exhaustive for finite carriers,
/// by proved closed form (with a sampled sanity check) for graded and
/// absolute-value carriers.
BipotentClass classify(const BipotentView& m, std::size_t budget = 1000,
                       std::uint64_t seed = kDefaultSeed);

std::string to_string(Theorem28Case c);

/// Canonical quotient map by equal colon sets of {x < 1} (finite carriers).
MultMap gamma_v0(const BipotentView& m);
/// Canonical quotient map by equal colon sets of {x <= 1}; requires a proper
/// carrier (some element above 1).
MultMap gamma_v(const BipotentView& m);

}  // namespace tropval
