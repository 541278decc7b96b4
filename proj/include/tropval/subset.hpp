#pragma once

#include "tropval/carrier.hpp"

namespace tropval {

/// Closed-form membership predicate for subsets of infinite carriers.
struct SubsetPred {
  enum Kind {
    All,
    ZeroOnly,
    BallLeq,      // {x : |x| <= radius}   on the rational-function field
    BallLt,       // {x : |x| <  radius}
    OrdGeq,       // {x : ord_t(x) >= min_ord} u {0}
    GhostAtMost,  // {x : nu(x) <= ghost_bound} on a symbolic supertropical carrier
  } kind = All;
  RatFunc radius;
  int min_ord = 0;
  std::optional<Elem> ghost_bound;
};

/// A distinguished subset of a carrier: a bit-set over element indices for
/// finite carriers, a closed-form predicate otherwise.
class Subset {
public:
  Subset() = default;
  static Subset of_bits(CarrierPtr c, std::vector<bool> bits);
  static Subset of_indices(CarrierPtr c, const std::vector<int>& idx);
  static Subset of_pred(CarrierPtr c, SubsetPred pred);
  static Subset all(CarrierPtr c);
  static Subset zero_only(CarrierPtr c);

  bool contains(const Elem& e) const;
  const CarrierPtr& carrier() const { return c_; }
  bool finite_backed() const { return bits_.has_value(); }
  const std::vector<bool>& bits() const { return *bits_; }
  const SubsetPred& pred() const { return *pred_; }
  std::vector<int> indices() const;
  std::size_t count() const;  // finite only

  bool is_all() const;
  bool is_zero_only() const;
  /// Set equality: exact for finite, compared on the deterministic sample
  /// otherwise.
  bool same_as(const Subset& o, std::size_t budget = 500, std::uint64_t seed = kDefaultSeed) const;

  std::string show() const;

private:
  CarrierPtr c_;
  std::optional<std::vector<bool>> bits_;
  std::optional<SubsetPred> pred_;
};

/// The colon set [L : x] = {z : z*x in L}. Exact bit-set for finite carriers,
/// closed-form predicate on the rational-function field.
Subset colon_set(const Subset& L, const Elem& x);

}  // namespace tropval
