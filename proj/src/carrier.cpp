#include "tropval/carrier.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tropval {

std::size_t Carrier::size() const { throw std::logic_error("size(): carrier is not finite"); }
Elem Carrier::element(int) const { throw std::logic_error("element(): carrier is not finite"); }

std::vector<Elem> all_elements(const Carrier& c) {
  std::vector<Elem> out;
  out.reserve(c.size());
  for (int i = 0; i < static_cast<int>(c.size()); ++i) out.push_back(c.element(i));
  return out;
}

FiniteSemiring::FiniteSemiring(std::string name, std::vector<std::string> elems, int zero,
                               int one, std::vector<int> add, std::vector<int> mul)
    : name_(std::move(name)), names_(std::move(elems)), zero_(zero), one_(one),
      add_(std::move(add)), mul_(std::move(mul)) {
  const std::size_t n = names_.size();
  if (n < 2) throw StructuralError("semiring '" + name_ + "': needs at least 2 elements (zero ring rejected)");
  if (add_.size() != n * n || mul_.size() != n * n)
    throw StructuralError("semiring '" + name_ + "': tables are not " + std::to_string(n) + "x" + std::to_string(n));
  auto in_range = [&](int i) { return i >= 0 && i < static_cast<int>(n); };
  if (!in_range(zero_) || !in_range(one_))
    throw StructuralError("semiring '" + name_ + "': zero/one index out of range");
  for (int v : add_)
    if (!in_range(v)) throw StructuralError("semiring '" + name_ + "': add table index out of range");
  for (int v : mul_)
    if (!in_range(v)) throw StructuralError("semiring '" + name_ + "': mul table index out of range");
  std::set<std::string> seen;
  for (const auto& s : names_)
    if (!seen.insert(s).second) throw StructuralError("semiring '" + name_ + "': duplicate element '" + s + "'");
}

std::optional<Elem> FiniteSemiring::invert(const Elem& e) const {
  int a = fin(e);
  for (int b = 0; b < static_cast<int>(size()); ++b)
    if (muli(a, b) == one_) return FinIdx{b};
  return std::nullopt;
}

int FiniteSemiring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

static const GradeElem& gr(const Elem& e) { return std::get<GradeElem>(e); }

Elem GradedCarrier::add(const Elem& a, const Elem& b) const {
  const GradeElem &x = gr(a), &y = gr(b);
  if (x.bottom) return y;
  if (y.bottom) return x;
  return GradeElem{false, std::max(x.k, y.k)};
}

Elem GradedCarrier::mul(const Elem& a, const Elem& b) const {
  const GradeElem &x = gr(a), &y = gr(b);
  if (x.bottom || y.bottom) return GradeElem{true, 0};
  return GradeElem{false, x.k + y.k};
}

std::optional<bool> GradedCarrier::leq(const Elem& a, const Elem& b) const {
  const GradeElem &x = gr(a), &y = gr(b);
  if (x.bottom) return true;
  if (y.bottom) return false;
  return x.k <= y.k;
}

std::vector<Elem> GradedCarrier::sample(std::size_t budget, std::uint64_t /*seed*/) const {
  std::vector<Elem> out;
  out.push_back(GradeElem{true, 0});
  for (std::int64_t k = 0; out.size() < budget; ++k) {
    out.push_back(GradeElem{false, k});
    if (!nat_ && out.size() < budget && k > 0) out.push_back(GradeElem{false, -k});
  }
  if (out.size() > budget) out.resize(budget);
  return out;
}

std::string GradedCarrier::show(const Elem& e) const {
  const GradeElem& x = gr(e);
  return x.bottom ? "bot" : "u^" + std::to_string(x.k);
}

std::optional<Elem> GradedCarrier::invert(const Elem& e) const {
  const GradeElem& x = gr(e);
  if (x.bottom) return std::nullopt;
  if (nat_) return x.k == 0 ? std::optional<Elem>(GradeElem{false, 0}) : std::nullopt;
  return GradeElem{false, -x.k};
}

static std::vector<Elem> ratfunc_sample(std::size_t budget, std::uint64_t seed) {
  std::vector<RatFunc> pre;
  const RatFunc t = RatFunc::t();
  const RatFunc one = RatFunc::from_int(1);
  pre.push_back(RatFunc{});
  pre.push_back(one);
  pre.push_back(-one);
  pre.push_back(RatFunc::from_int(2));
  pre.push_back(RatFunc::from_int(-2));
  pre.push_back(RatFunc::from_rational(Rational(1, 2)));
  pre.push_back(RatFunc::from_rational(Rational(-1, 2)));
  pre.push_back(t);
  pre.push_back(-t);
  pre.push_back(t.inverse());
  pre.push_back(t * t);
  pre.push_back(one + t);
  pre.push_back(one - t);
  pre.push_back((one + t).inverse());
  pre.push_back(t * RatFunc::from_int(2));
  pre.push_back(t.inverse() * RatFunc::from_rational(Rational(1, 2)));

  std::vector<Elem> out;
  std::set<std::string> seen;
  auto push = [&](const RatFunc& r) {
    if (seen.insert(r.to_string()).second) out.push_back(r);
  };
  for (const auto& r : pre) {
    if (out.size() >= budget) break;
    push(r);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> deg(0, 3);
  auto draw_poly = [&]() {
    int d = deg(rng);
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
    for (auto& c : cs) c = Rational(coeff(rng));
    return Poly{std::move(cs)};
  };
  while (out.size() < budget) {
    Poly num = draw_poly();
    Poly den = draw_poly();
    if (den.is_zero()) continue;
    push(RatFunc(num, den));
  }
  return out;
}

std::vector<Elem> RatFuncField::sample(std::size_t budget, std::uint64_t seed) const {
  return ratfunc_sample(budget, seed);
}

std::optional<Elem> RatFuncField::invert(const Elem& e) const {
  if (rf(e).is_zero()) return std::nullopt;
  return rf(e).inverse();
}

std::vector<Elem> AbsValueCarrier::sample(std::size_t budget, std::uint64_t seed) const {
  auto raw = ratfunc_sample(2 * budget, seed);
  std::vector<Elem> out;
  std::set<std::string> seen;
  for (const auto& e : raw) {
    RatFunc a = RatFuncField::rf(e).abs();
    if (seen.insert(a.to_string()).second) out.push_back(a);
    if (out.size() >= budget) break;
  }
  return out;
}

std::optional<Elem> AbsValueCarrier::invert(const Elem& e) const {
  if (RatFuncField::rf(e).is_zero()) return std::nullopt;
  return RatFuncField::rf(e).inverse();
}

OstrCarrier::OstrCarrier(std::string name, CarrierPtr tangible_side, CarrierPtr ghost_side,
                         MapFn rho)
    : name_(std::move(name)), tan_(std::move(tangible_side)), gh_(std::move(ghost_side)),
      rho_(std::move(rho)) {}

static const STElem& st(const Elem& e) { return std::get<STElem>(e); }

Elem OstrCarrier::nu_ghost(const Elem& e) const {
  const STElem& x = st(e);
  switch (x.tag) {
    case STElem::Zero: return gh_->zero();
    case STElem::Tangible: return rho_(from_base(x.v));
    default: return from_base(x.v);
  }
}

Elem OstrCarrier::mul(const Elem& a, const Elem& b) const {
  const STElem &x = st(a), &y = st(b);
  if (x.tag == STElem::Zero || y.tag == STElem::Zero) return zero();
  if (x.tag == STElem::Tangible && y.tag == STElem::Tangible)
    return STElem{STElem::Tangible, to_base(tan_->mul(from_base(x.v), from_base(y.v)))};
  Elem gx = x.tag == STElem::Ghost ? from_base(x.v) : rho_(from_base(x.v));
  Elem gy = y.tag == STElem::Ghost ? from_base(y.v) : rho_(from_base(y.v));
  return STElem{STElem::Ghost, to_base(gh_->mul(gx, gy))};
}

Elem OstrCarrier::add(const Elem& a, const Elem& b) const {
  Elem ga = nu_ghost(a), gb = nu_ghost(b);
  if (gh_->eq(ga, gb)) {
    if (st(a).tag == STElem::Zero) return zero();
    return STElem{STElem::Ghost, to_base(ga)};
  }
  bool a_le = *gh_->leq(ga, gb);
  return a_le ? b : a;
}

std::optional<bool> OstrCarrier::leq(const Elem& a, const Elem& b) const {
  const STElem &x = st(a), &y = st(b);
  if (x.tag == STElem::Zero) return true;
  if (y.tag == STElem::Zero) return false;
  Elem xv = from_base(x.v), yv = from_base(y.v);
  if (x.tag == y.tag)
    return x.tag == STElem::Tangible ? tan_->leq(xv, yv) : gh_->leq(xv, yv);
  if (x.tag == STElem::Tangible) return gh_->leq(rho_(xv), yv);          // EO4
  return *gh_->leq(xv, rho_(yv)) && !gh_->eq(xv, rho_(yv));              // EO5
}

std::vector<Elem> OstrCarrier::sample(std::size_t budget, std::uint64_t seed) const {
  std::vector<Elem> out;
  out.push_back(zero());
  auto ts = tan_->sample(budget / 2 + 1, seed);
  auto gs = gh_->sample(budget / 2 + 1, seed + 1);
  for (const auto& e : ts) {
    if (tan_->is_zero(e)) continue;
    out.push_back(STElem{STElem::Tangible, to_base(e)});
    if (out.size() >= budget) return out;
  }
  for (const auto& e : gs) {
    if (gh_->is_zero(e)) continue;
    out.push_back(STElem{STElem::Ghost, to_base(e)});
    if (out.size() >= budget) return out;
  }
  return out;
}

std::string OstrCarrier::show(const Elem& e) const {
  const STElem& x = st(e);
  switch (x.tag) {
    case STElem::Zero: return "0";
    case STElem::Tangible: return "t:" + tan_->show(from_base(x.v));
    default: return "g:" + gh_->show(from_base(x.v));
  }
}

std::optional<Elem> OstrCarrier::invert(const Elem& e) const {
  const STElem& x = st(e);
  if (x.tag != STElem::Tangible) return std::nullopt;  // units of U are tangible
  auto inv = tan_->invert(from_base(x.v));
  if (!inv) return std::nullopt;
  return STElem{STElem::Tangible, to_base(*inv)};
}

std::vector<Elem> NormalizedQuotientCarrier::sample(std::size_t budget, std::uint64_t seed) const {
  auto raw = base_->sample(budget, seed);
  std::vector<Elem> out;
  for (const auto& e : raw) {
    Elem r = norm_(e);
    bool dup = false;
    for (const auto& o : out)
      if (o == r) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(r);
  }
  return out;
}

std::optional<Elem> NormalizedQuotientCarrier::invert(const Elem& e) const {
  auto inv = base_->invert(norm_(e));
  if (!inv) return std::nullopt;
  Elem cand = norm_(*inv);
  if (!eq(mul(e, cand), one())) return std::nullopt;
  return cand;
}

std::vector<Elem> finite_units(const Carrier& c) {
  std::vector<Elem> out;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    Elem e = c.element(i);
    if (c.invert(e)) out.push_back(e);
  }
  return out;
}

}  // namespace tropval
