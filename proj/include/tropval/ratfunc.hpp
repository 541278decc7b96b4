#pragma once

#include "tropval/poly.hpp"

#include <string>

namespace tropval {

/// Element of the ordered field Q(t) of rational functions, kept in canonical
/// reduced form: gcd(num, den) = 1 and den monic. The order makes t a positive
/// infinitesimal: an element is positive iff the lowest-degree nonzero
/// coefficient of its Laurent expansion at t = 0 is positive.
class RatFunc {
public:
  RatFunc() : num_{}, den_{Poly::constant(1)} {}
  RatFunc(Poly num, Poly den);
  static RatFunc from_int(long long n) { return RatFunc(Poly::constant(Rational(n)), Poly::constant(1)); }
  static RatFunc from_rational(const Rational& q) { return RatFunc(Poly::constant(q), Poly::constant(1)); }
  static RatFunc t() { return RatFunc(Poly::t(), Poly::constant(1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Sign in the order with t an infinitesimal > 0.
  int sign() const;
  /// Sign of a - b, computed on the unreduced difference (no gcd).
  static int cmp(const RatFunc& a, const RatFunc& b);
  bool operator<(const RatFunc& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const RatFunc& o) const { return cmp(*this, o) <= 0; }
  RatFunc abs() const { return sign() < 0 ? -*this : *this; }

  /// t-adic order ord_t(num) - ord_t(den). Requires nonzero.
  int ord() const;

  std::string to_string() const;

private:
  Poly num_, den_;
};

}  // namespace tropval
