#pragma once

#include "tropval/ratfunc.hpp"

#include <cstdint>
#include <variant>

namespace tropval {

/// Element of a finite table carrier, by dense index.
struct FinIdx {
  int i = 0;
  bool operator==(const FinIdx&) const = default;
};

/// Element of a graded max-plus carrier: BOTTOM (the semiring zero) or the
/// multiplicative element u^k for an integer grade k.
struct GradeElem {
  bool bottom = true;
  std::int64_t k = 0;
  bool operator==(const GradeElem& o) const {
    return bottom == o.bottom && (bottom || k == o.k);
  }
};

using BaseElem = std::variant<FinIdx, GradeElem, RatFunc>;

/// Element of a symbolic supertropical carrier: zero, a tangible element of
/// the tangible monoid, or a ghost element of the ghost monoid.
struct STElem {
  enum Tag { Zero = 0, Tangible = 1, Ghost = 2 };
  Tag tag = Zero;
  BaseElem v = FinIdx{0};
  bool operator==(const STElem& o) const {
    if (tag != o.tag) return false;
    if (tag == Zero) return true;
    return v == o.v;
  }
};

using Elem = std::variant<FinIdx, GradeElem, RatFunc, STElem>;

inline BaseElem to_base(const Elem& e) {
  if (std::holds_alternative<FinIdx>(e)) return std::get<FinIdx>(e);
  if (std::holds_alternative<GradeElem>(e)) return std::get<GradeElem>(e);
  return std::get<RatFunc>(e);
}

inline Elem from_base(const BaseElem& b) {
  if (std::holds_alternative<FinIdx>(b)) return std::get<FinIdx>(b);
  if (std::holds_alternative<GradeElem>(b)) return std::get<GradeElem>(b);
  return std::get<RatFunc>(b);
}

inline int fin(const Elem& e) { return std::get<FinIdx>(e).i; }

}  // namespace tropval
