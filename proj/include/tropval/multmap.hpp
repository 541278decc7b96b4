#pragma once

#include "tropval/subset.hpp"

namespace tropval {

enum class MapKind { Mult01, MValuation, Valuation, Homomorphism };

/// A 0-1-multiplicative map between carriers: the common supertype of
/// m-valuations, valuations, quotient maps and transmissions. Finite sources
/// carry a full table; infinite sources a closed-form function.
struct MultMap {
  CarrierPtr source, target;
  std::optional<std::vector<Elem>> table;  // indexed by source element index
  MapFn fn;
  MapKind kind = MapKind::Mult01;
  std::string label;

  /// Provenance of quotient-style constructions, used by assertion hooks
  /// (valuation_pair and friends).
  enum class From { None, Prime, Cmc, PrimeSubset, CmcSubset, Identity } from = From::None;
  std::shared_ptr<const Subset> from_subset;

  /// Right inverse (a section): fn(section(m)) = m for every m in the image.
  /// Set by the quotient constructions; used to pull transmissions back along
  /// surjective maps with infinite sources.
  MapFn section;

  Elem operator()(const Elem& a) const { return fn(a); }
};

MultMap make_table_map(CarrierPtr source, CarrierPtr target, std::vector<Elem> table,
                       MapKind kind, std::string label);
MultMap make_fn_map(CarrierPtr source, CarrierPtr target, MapFn fn, MapKind kind,
                    std::string label);
MultMap identity_map(CarrierPtr c);
/// g after f; requires f.target and g.source to be the same carrier object.
MultMap compose(const MultMap& g, const MultMap& f);

/// v(0)=0, v(1)=1, v(xy)=v(x)v(y). Exhaustive on finite sources.
Report check_mult01(const MultMap& v, std::size_t budget = 500, std::uint64_t seed = kDefaultSeed);
/// Surjectivity onto a finite target.
bool surjective_onto_finite(const MultMap& v);

}  // namespace tropval
