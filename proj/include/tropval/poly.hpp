#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tropval {

using Rational = boost::multiprecision::cpp_rational;

int sgn(const Rational& q);

/// Dense univariate polynomial over the rationals, variable `t`.
/// Coefficients are stored lowest degree first with no trailing zeros,
/// so degree() == coeffs().size() - 1 and the zero polynomial is empty.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly t();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient (t-adic order). Requires nonzero.
  int ord() const;
  const Rational& coeff(std::size_t i) const;
  const Rational& lead() const { return c_.back(); }
  const Rational& low() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Euclidean division; requires a nonzero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  /// Monic gcd; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b);

  Poly monic() const;
  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace tropval
