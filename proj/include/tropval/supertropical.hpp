#pragma once

#include "tropval/valuation.hpp"

namespace tropval {

/// A carrier seen as a supertropical semiring: e = 1+1 is idempotent, the
/// ghost ideal eU is bipotent, ex = 0 forces x = 0, and addition follows the
/// ghost-companion rule.
struct SupertropicalView {
  CarrierPtr u;
  Elem e;

  Elem nu(const Elem& x) const { return u->mul(e, x); }
  bool is_ghost_or_zero(const Elem& x) const { return u->eq(nu(x), x); }
  bool is_tangible(const Elem& x) const { return !is_ghost_or_zero(x); }
  /// Order on ghost companions: nu(x) <= nu(y) via ghost addition.
  bool nu_leq(const Elem& x, const Elem& y) const {
    return u->eq(u->add(nu(x), nu(y)), nu(y));
  }
};

struct VerifiedSupertropical {
  std::optional<SupertropicalView> view;
  Report report;
};

/// Checks e idempotent, eU bipotent, the kernel condition and the three-case
/// addition rule; exhaustive for finite carriers, sampled otherwise.
VerifiedSupertropical verify_supertropical(CarrierPtr c, std::size_t budget = 2000,
                                           std::uint64_t seed = kDefaultSeed);

/// A supertropical view together with a total order compatible with both
/// operations. Finite carriers carry an explicit rank list; symbolic carriers
/// use their native order.
struct OrderedSupertropical {
  SupertropicalView st;
  std::optional<std::vector<int>> rank_of;
  bool sampled = false;

  bool leq(const Elem& a, const Elem& b) const;
  bool lt(const Elem& a, const Elem& b) const { return leq(a, b) && !st.u->eq(a, b); }
  Elem max(const Elem& a, const Elem& b) const { return leq(a, b) ? b : a; }
};

struct VerifiedOrder {
  std::optional<OrderedSupertropical> view;
  Report report;
};

/// Checks compatibility of the order with + and *, 0 <= 1, agreement with the
/// bipotent order on eU, the five ghost-map laws, the reconstruction of
/// addition from order and ghost map, and the two tangible/ghost comparison
/// laws.
VerifiedOrder verify_total_order(const SupertropicalView& st,
                                 std::optional<std::vector<int>> rank_of,
                                 std::size_t budget = 2000, std::uint64_t seed = kDefaultSeed);

/// Result of the ordered STR construction: the ordered carrier plus the
/// embeddings of the tangible and ghost sides, and the connecting map.
struct OstrBuild {
  OrderedSupertropical u;
  CarrierPtr tan_carrier;   // N, with T = N \ {0}
  CarrierPtr ghost_carrier; // M, with G = M \ {0}
  MultMap embed_tangible;   // N -> U
  MultMap embed_ghost;      // M -> U
  MultMap rho;              // N -> M
};

/// Builds OSTR(T, G, v) from bipotent carriers N = T u {0}, M = G u {0} and
/// an order-preserving 0-1-multiplicative v : N -> M with trivial kernel and
/// M \ {0} cancellative. Finite inputs are materialized as a table semiring
/// (elements named t<name>, g<name>); infinite inputs build a symbolic
/// carrier. The output is verified against the supertropical and total-order
/// checkers before being returned.
OstrBuild build_ostr(const BipotentView& n, const BipotentView& m, const MultMap& v,
                     std::size_t budget = 2000, std::uint64_t seed = kDefaultSeed);

/// A supervaluation phi : R -> U with e o phi an m-valuation, together with
/// the construction data behind its target.
struct Supervaluation {
  MultMap phi;   // R -> U, tangible-valued for the STR constructions
  OstrBuild build;
  MultMap w;     // R -> N with phi = embed_tangible o w
  MultMap cover; // e o phi as a map R -> M (the covered valuation)
};

/// Tangible supervaluation attached to an m-valuation (or 0-1-multiplicative
/// map) w : R -> N and a homomorphism rho : N -> M with trivial kernel into a
/// cancellative M. Asserts the image is tangible, e o phi = rho o w, and -
/// when w is subadditive - that phi is ultrametric.
Supervaluation tangible_cover(const MultMap& w, const MultMap& rho, std::size_t budget = 800,
                              std::uint64_t seed = kDefaultSeed);

enum class EnvelopeSide { Q, B };

/// The artinian supervaluations attached to a true generalized CMC-subset:
/// side Q composes v_L with the core valuation v_Q/C, side B (defined when
/// B_u(L) != R) with the envelope valuation v_B/C. Asserts the artinian bound
/// with constant phi(u^-1).
Supervaluation build_phi_L(const SubsetWitness& L, const Elem& u, EnvelopeSide side,
                           std::size_t budget = 500, std::uint64_t seed = kDefaultSeed);

struct SupervalClass {
  bool tangible = false;
  bool ultrametric = false;
  bool sampled = false;
  std::vector<Elem> artinian_constants;  // finite targets: every unit constant
  std::optional<Elem> least_constant;    // infinite targets: sampled least bound
};

SupervalClass classify_supervaluation(const Supervaluation& sv, std::size_t budget = 800,
                                      std::uint64_t seed = kDefaultSeed);

/// Artinian bound with a specific constant c.
bool artinian_with_constant(const Supervaluation& sv, const Elem& c, std::string* witness,
                            std::size_t budget = 800, std::uint64_t seed = kDefaultSeed);

struct Prop422Result {
  bool hypotheses_met = false;
  std::string hypothesis_failure;
  Report conclusions;
};

/// If U has a unit c > e then every vo-supervaluation into U is artinian with
/// constant c; if moreover phi(uu) <= c^-1 for a source unit uu, then p_phi is
/// a prime subset and A_phi a CMC-subset, both with exponent uu. Hypothesis
/// failures are reported, not raised.
Prop422Result check_prop_4_22(const Supervaluation& sv, const Elem& c, const Elem& uu,
                              std::size_t budget = 800, std::uint64_t seed = kDefaultSeed);

struct TransmissionFlags {
  bool multiplicative = false;
  bool transmission = false;
  bool homomorphism = false;
  bool monotone = false;
  std::string witness;
  Report thm53;  // the three equivalent conditions, when mult + monotone
};

/// Flags for a candidate map between supertropical carriers; when both are
/// ordered and the map is multiplicative and order preserving, also checks
/// that conditions (1), (2), (3) of the monotone-transmission theorem agree.
TransmissionFlags check_transmission(const MultMap& alpha, const OrderedSupertropical& u,
                                     const OrderedSupertropical& v, std::size_t budget = 2000,
                                     std::uint64_t seed = kDefaultSeed);

enum class DominanceMode { Plain, Total };

struct SupervalDominance {
  bool holds = false;
  bool sampled = false;
  std::string witness;
  std::optional<MultMap> alpha;  // transmission with alpha o phi = psi
  std::optional<TransmissionFlags> alpha_flags;
};

/// Dominance of supervaluations: PLAIN checks the three coarsening axioms,
/// TOTAL the order-refining variants. On success with a surjective phi the
/// transmission alpha is extracted and checked (monotone in the TOTAL case).
/// Cross-checks: total dominance implies plain dominance, and the two primed
/// axioms imply the unprimed ghost axiom.
SupervalDominance dominance(const Supervaluation& phi, const Supervaluation& psi,
                            DominanceMode mode, std::size_t budget = 2000,
                            std::uint64_t seed = kDefaultSeed);

/// For a unit g of the source lying in L: f = u g is again an exponent,
/// B_f(L) = union of g^-n B_u(L), Q_f(L) = intersection of g^n Q_u(L), and
/// phi_{L,u} totally dominates phi_{L,f} (psi-side likewise when B_f != R).
Report check_example_5_9(const SubsetWitness& L, const Elem& u, const Elem& g,
                         std::size_t budget = 400, std::uint64_t seed = kDefaultSeed);

}  // namespace tropval
