#include "tropval/subset.hpp"

#include <algorithm>
#include <sstream>

namespace tropval {

Subset Subset::of_bits(CarrierPtr c, std::vector<bool> bits) {
  if (!c->finite() || bits.size() != c->size())
    throw PreconditionError("Subset::of_bits: carrier/bit-set mismatch");
  Subset s;
  s.c_ = std::move(c);
  s.bits_ = std::move(bits);
  return s;
}

Subset Subset::of_indices(CarrierPtr c, const std::vector<int>& idx) {
  std::vector<bool> bits(c->size(), false);
  for (int i : idx) {
    if (i < 0 || i >= static_cast<int>(bits.size()))
      throw PreconditionError("Subset::of_indices: index out of range");
    bits[static_cast<std::size_t>(i)] = true;
  }
  return of_bits(std::move(c), std::move(bits));
}

Subset Subset::of_pred(CarrierPtr c, SubsetPred pred) {
  Subset s;
  s.c_ = std::move(c);
  s.pred_ = std::move(pred);
  return s;
}

Subset Subset::all(CarrierPtr c) {
  if (c->finite()) return of_bits(std::move(c), std::vector<bool>(c->size(), true));
  return of_pred(std::move(c), SubsetPred{SubsetPred::All, {}, 0, std::nullopt});
}

Subset Subset::zero_only(CarrierPtr c) {
  if (c->finite()) {
    std::vector<bool> bits(c->size(), false);
    bits[static_cast<std::size_t>(fin(c->zero()))] = true;
    return of_bits(std::move(c), std::move(bits));
  }
  return of_pred(std::move(c), SubsetPred{SubsetPred::ZeroOnly, {}, 0, std::nullopt});
}

bool Subset::contains(const Elem& e) const {
  if (bits_) return (*bits_)[static_cast<std::size_t>(fin(e))];
  const SubsetPred& p = *pred_;
  switch (p.kind) {
    case SubsetPred::All: return true;
    case SubsetPred::ZeroOnly: return c_->is_zero(e);
    case SubsetPred::BallLeq: {
      const RatFunc& x = std::get<RatFunc>(e);
      return x.abs() <= p.radius;
    }
    case SubsetPred::BallLt: {
      const RatFunc& x = std::get<RatFunc>(e);
      return x.abs() < p.radius;
    }
    case SubsetPred::OrdGeq: {
      const RatFunc& x = std::get<RatFunc>(e);
      return x.is_zero() || x.ord() >= p.min_ord;
    }
    case SubsetPred::GhostAtMost: {
      const auto* u = dynamic_cast<const OstrCarrier*>(c_.get());
      if (!u) throw PreconditionError("GhostAtMost predicate needs a symbolic supertropical carrier");
      return *u->ghost_side()->leq(u->nu_ghost(e), *p.ghost_bound);
    }
  }
  return false;
}

std::vector<int> Subset::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < bits_->size(); ++i)
    if ((*bits_)[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::size_t Subset::count() const {
  return static_cast<std::size_t>(std::count(bits_->begin(), bits_->end(), true));
}

bool Subset::is_all() const {
  if (bits_) return count() == bits_->size();
  return pred_->kind == SubsetPred::All;
}

bool Subset::is_zero_only() const {
  if (bits_) return count() == 1 && (*bits_)[static_cast<std::size_t>(fin(c_->zero()))];
  return pred_->kind == SubsetPred::ZeroOnly;
}

bool Subset::same_as(const Subset& o, std::size_t budget, std::uint64_t seed) const {
  if (bits_ && o.bits_) return *bits_ == *o.bits_;
  for (const Elem& e : c_->sample(budget, seed))
    if (contains(e) != o.contains(e)) return false;
  return true;
}

std::string Subset::show() const {
  if (bits_) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) os << " ";
      os << c_->show(c_->element(i));
      first = false;
    }
    os << "}";
    return os.str();
  }
  const SubsetPred& p = *pred_;
  switch (p.kind) {
    case SubsetPred::All: return "all";
    case SubsetPred::ZeroOnly: return "{0}";
    case SubsetPred::BallLeq: return "{|x| <= " + p.radius.to_string() + "}";
    case SubsetPred::BallLt: return "{|x| < " + p.radius.to_string() + "}";
    case SubsetPred::OrdGeq: return "{ord >= " + std::to_string(p.min_ord) + "}";
    case SubsetPred::GhostAtMost: return "{nu(x) <= " + c_->show(*p.ghost_bound) + "}";
  }
  return "?";
}

Subset colon_set(const Subset& L, const Elem& x) {
  const CarrierPtr& c = L.carrier();
  if (L.finite_backed()) {
    std::vector<bool> bits(c->size(), false);
    for (int z = 0; z < static_cast<int>(c->size()); ++z)
      bits[static_cast<std::size_t>(z)] = L.contains(c->mul(c->element(z), x));
    return Subset::of_bits(c, std::move(bits));
  }
  const SubsetPred& p = L.pred();
  const RatFunc* rx = std::get_if<RatFunc>(&x);
  switch (p.kind) {
    case SubsetPred::All: return Subset::all(c);
    case SubsetPred::ZeroOnly:
      // in the field, z x = 0 iff z = 0 or x = 0
      if (rx && rx->is_zero()) return Subset::all(c);
      return Subset::zero_only(c);
    case SubsetPred::BallLeq:
      if (rx->is_zero()) return Subset::all(c);
      return Subset::of_pred(c, SubsetPred{SubsetPred::BallLeq, p.radius / rx->abs(), 0, std::nullopt});
    case SubsetPred::BallLt:
      if (rx->is_zero()) return Subset::all(c);
      return Subset::of_pred(c, SubsetPred{SubsetPred::BallLt, p.radius / rx->abs(), 0, std::nullopt});
    case SubsetPred::OrdGeq:
      if (rx->is_zero()) return Subset::all(c);
      return Subset::of_pred(c, SubsetPred{SubsetPred::OrdGeq, {}, p.min_ord - rx->ord(), std::nullopt});
    default:
      throw PreconditionError("colon_set: unsupported predicate kind");
  }
}

}  // namespace tropval
