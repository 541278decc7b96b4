#include "tropval/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tropval {

int sgn(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) {
  if (c == 0) return Poly{};
  return Poly{{c}};
}

Poly Poly::t() { return Poly{{Rational(0), Rational(1)}}; }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::ord() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  throw std::logic_error("Poly::ord of zero polynomial");
}

const Rational& Poly::coeff(std::size_t i) const {
  static const Rational kZero(0);
  return i < c_.size() ? c_[i] : kZero;
}

const Rational& Poly::low() const { return c_[static_cast<std::size_t>(ord())]; }

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly{std::move(r)};
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x = -x;
  return Poly{std::move(r)};
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly{};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly{std::move(r)};
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::invalid_argument("Poly::divmod by zero");
  std::vector<Rational> rem(a.c_);
  std::vector<Rational> quo;
  int db = b.degree();
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - static_cast<std::size_t>(db), Rational(0));
  while (true) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < db) break;
    Rational f = rem.back() / b.lead();
    quo[static_cast<std::size_t>(dr - db)] = f;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(dr - db + i)] -= f * b.c_[static_cast<std::size_t>(i)];
  }
  q = Poly{std::move(quo)};
  r = Poly{std::move(rem)};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? Poly{} : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> r(c_);
  Rational l = lead();
  for (auto& x : r) x /= l;
  return Poly{std::move(r)};
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    if (i == 0 || a != 1) os << a;
    if (i > 0) {
      if (a != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace tropval
