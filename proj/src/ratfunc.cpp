#include "tropval/ratfunc.hpp"

#include <stdexcept>

namespace tropval {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rational l = den_.lead();
  if (l != 1) {
    num_ = num_ * Poly::constant(1 / l);
    den_ = den_.monic();
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

int RatFunc::sign() const {
  if (is_zero()) return 0;
  return sgn(num_.low()) * sgn(den_.low());
}

int RatFunc::cmp(const RatFunc& a, const RatFunc& b) {
  // sign of (a.num b.den - b.num a.den) / (a.den b.den); reduction cannot
  // change the sign, so skip it
  Poly num = a.num_ * b.den_ - b.num_ * a.den_;
  if (num.is_zero()) return 0;
  return sgn(num.low()) * sgn(a.den_.low()) * sgn(b.den_.low());
}

int RatFunc::ord() const {
  if (is_zero()) throw std::logic_error("RatFunc::ord of zero");
  return num_.ord() - den_.ord();
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace tropval
