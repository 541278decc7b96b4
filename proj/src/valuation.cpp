#include "tropval/valuation.hpp"

#include "tropval/axioms.hpp"
#include "tropval/detail/scan.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace tropval {

std::string to_string(SubsetClass c) {
  switch (c) {
    case SubsetClass::Prime: return "PRIME";
    case SubsetClass::CmcSubsemiring: return "CMC_SUBSEMIRING";
    case SubsetClass::PrimeSubset: return "PRIME_SUBSET";
    case SubsetClass::CmcSubset: return "CMC_SUBSET";
    default: return "INVALID";
  }
}

using detail::make_pairs;
using detail::sample_of;
using detail::scan_pairs;

SubsetWitness classify_subset(const Subset& s, const std::vector<Elem>& declared_exponents,
                              std::size_t budget, std::uint64_t seed) {
  const CarrierPtr& c = s.carrier();
  SubsetWitness w;
  w.set = s;
  w.proper = !s.is_all();
  w.sampled = !c->finite();

  auto pp = make_pairs(*c, budget, seed);
  std::string wit;

  if (!s.contains(c->zero())) {
    w.why_not_prime = w.why_not_cmc = "0 not in subset";
    return w;
  }
  auto in = [&](const Elem& e) { return s.contains(e); };
  bool mult_closed = scan_pairs(
      pp, [&](const Elem& a, const Elem& b) { return !(in(a) && in(b)) || in(c->mul(a, b)); },
      &wit, *c);
  if (!mult_closed) {
    w.why_not_prime = w.why_not_cmc = "subset not multiplicatively closed, witness " + wit;
    return w;
  }
  bool comp_closed = scan_pairs(
      pp, [&](const Elem& a, const Elem& b) { return (in(a) || in(b)) || !in(c->mul(a, b)); },
      &wit, *c);
  if (!comp_closed) {
    w.why_not_prime = w.why_not_cmc = "complement not multiplicatively closed, witness " + wit;
    return w;
  }

  // exponent set: units u with u(L+L) <= L
  std::vector<Elem> unit_pool;
  if (c->finite()) unit_pool = finite_units(*c);
  else unit_pool = declared_exponents;
  auto is_exponent = [&](const Elem& u) {
    if (!c->invert(u)) return false;
    return scan_pairs(
        pp,
        [&](const Elem& a, const Elem& b) {
          return !(in(a) && in(b)) || in(c->mul(u, c->add(a, b)));
        },
        nullptr, *c);
  };
  for (const Elem& u : unit_pool)
    if (is_exponent(u)) w.exponents.push_back(u);
  bool exp1 = false;
  for (const Elem& u : w.exponents)
    if (c->is_one(u)) exp1 = true;
  // exponent 1 is plain additive closure; detect it even when 1 was not in
  // the declared pool
  if (!exp1 && !c->finite()) {
    if (is_exponent(c->one())) {
      exp1 = true;
      w.exponents.insert(w.exponents.begin(), c->one());
    }
  }
  w.is_true = !exp1;

  bool one_in = s.contains(c->one());
  if (one_in) {
    w.why_not_prime = "1 in subset (forbidden for primes)";
    if (exp1) w.cls = SubsetClass::CmcSubsemiring;
    else if (!w.exponents.empty()) w.cls = SubsetClass::CmcSubset;
    else w.why_not_cmc = "no unit exponent with u(L+L) in L";
  } else {
    w.why_not_cmc = "1 not in subset";
    if (exp1) w.cls = SubsetClass::Prime;
    else if (!w.exponents.empty()) w.cls = SubsetClass::PrimeSubset;
    else w.why_not_prime = "no unit exponent with u(L+L) in L";
  }
  return w;
}

namespace {

MultMap::From from_of(SubsetClass c) {
  switch (c) {
    case SubsetClass::Prime: return MultMap::From::Prime;
    case SubsetClass::CmcSubsemiring: return MultMap::From::Cmc;
    case SubsetClass::PrimeSubset: return MultMap::From::PrimeSubset;
    case SubsetClass::CmcSubset: return MultMap::From::CmcSubset;
    default: return MultMap::From::None;
  }
}

/// Asserts that supp = {x : Rx <= L} is a prime ideal of the source.
void assert_support_prime_ideal(const Carrier& c, const std::vector<Elem>& es,
                                const std::function<bool(const Elem&)>& in_supp) {
  if (in_supp(c.one())) throw std::logic_error("support contains 1");
  if (!in_supp(c.zero())) throw std::logic_error("support misses 0");
  for (const Elem& x : es)
    for (const Elem& y : es) {
      if (in_supp(x) && in_supp(y) && !in_supp(c.add(x, y)))
        throw std::logic_error("support not additively closed");
      if (in_supp(x) && !in_supp(c.mul(x, y)))
        throw std::logic_error("support not an ideal");
      if (!in_supp(x) && !in_supp(y) && in_supp(c.mul(x, y)))
        throw std::logic_error("support not prime");
    }
}

MultMap quotient_valuation_finite(const SubsetWitness& L) {
  const CarrierPtr& c = L.set.carrier();
  const int n = static_cast<int>(c->size());

  std::vector<std::vector<bool>> colon(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) colon[static_cast<std::size_t>(i)] = colon_set(L.set, c->element(i)).bits();

  auto subset_le = [](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  };
  // total-order dichotomy on colon sets
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!subset_le(colon[static_cast<std::size_t>(i)], colon[static_cast<std::size_t>(j)]) &&
          !subset_le(colon[static_cast<std::size_t>(j)], colon[static_cast<std::size_t>(i)]))
        throw std::logic_error("quotient_valuation: colon sets of " + c->show(c->element(i)) +
                               " and " + c->show(c->element(j)) + " are incomparable");

  // group by equal colon sets; class representative = minimal index
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (colon[static_cast<std::size_t>(i)] == colon[static_cast<std::size_t>(reps[k])]) {
        class_of[static_cast<std::size_t>(i)] = static_cast<int>(k);
        break;
      }
    if (class_of[static_cast<std::size_t>(i)] < 0) {
      class_of[static_cast<std::size_t>(i)] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  const int k = static_cast<int>(reps.size());
  // order classes: bigger colon set = smaller class
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto &ca = colon[static_cast<std::size_t>(reps[static_cast<std::size_t>(a)])],
               &cb = colon[static_cast<std::size_t>(reps[static_cast<std::size_t>(b)])];
    if (ca == cb) return false;
    return subset_le(cb, ca);
  });
  std::vector<int> rank(static_cast<std::size_t>(k));
  for (int pos = 0; pos < k; ++pos) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;

  const auto fs = std::dynamic_pointer_cast<const FiniteSemiring>(c);
  std::vector<std::string> qnames;
  for (int r : reps)
    qnames.push_back(fs ? fs->element_names()[static_cast<std::size_t>(r)]
                        : c->show(c->element(r)));
  auto cls = [&](const Elem& e) { return class_of[static_cast<std::size_t>(fin(e))]; };
  std::vector<int> qadd(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  std::vector<int> qmul(qadd.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      qadd[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
          rank[static_cast<std::size_t>(i)] >= rank[static_cast<std::size_t>(j)] ? i : j;
      Elem prod = c->mul(c->element(reps[static_cast<std::size_t>(i)]), c->element(reps[static_cast<std::size_t>(j)]));
      qmul[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] = cls(prod);
    }
  // multiplicativity of the relation: products may not depend on representatives
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = cls(c->mul(c->element(x), c->element(y)));
      int rhs = qmul[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)]) * static_cast<std::size_t>(k) +
                     static_cast<std::size_t>(class_of[static_cast<std::size_t>(y)])];
      if (lhs != rhs)
        throw std::logic_error("quotient_valuation: class multiplication not well-defined");
    }

  int zero_cls = cls(c->zero());
  if (rank[static_cast<std::size_t>(zero_cls)] != 0)
    throw std::logic_error("quotient_valuation: class of 0 is not least");
  auto target = std::make_shared<FiniteSemiring>(
      "M(" + c->name() + ";" + L.set.show() + ")", std::move(qnames), zero_cls, cls(c->one()),
      std::move(qadd), std::move(qmul));
  verify_semiring(*target).require("quotient_valuation target");

  std::vector<Elem> table;
  for (int i = 0; i < n; ++i) table.push_back(FinIdx{class_of[static_cast<std::size_t>(i)]});
  bool exp1 = !L.is_true;
  MultMap v = make_table_map(c, target, std::move(table),
                             exp1 ? MapKind::MValuation : MapKind::Mult01,
                             "v_" + L.set.show());
  v.from = from_of(L.cls);
  v.from_subset = std::make_shared<Subset>(L.set);
  auto reps_copy = std::make_shared<std::vector<int>>(reps);
  v.section = [reps_copy](const Elem& e) -> Elem {
    return FinIdx{(*reps_copy)[static_cast<std::size_t>(fin(e))]};
  };

  // support = {x : Rx <= L} = class of 0, and it is a prime ideal
  auto es = all_elements(*c);
  for (const Elem& x : es) {
    bool rx_in_l = true;
    for (const Elem& z : es)
      if (!L.set.contains(c->mul(z, x))) {
        rx_in_l = false;
        break;
      }
    if (rx_in_l != target->is_zero(v(x)))
      throw std::logic_error("quotient_valuation: support differs from {x : Rx in L} at " + c->show(x));
  }
  assert_support_prime_ideal(*c, es, [&](const Elem& x) { return target->is_zero(v(x)); });
  return v;
}

MultMap quotient_valuation_ratfunc(const SubsetWitness& L, std::size_t budget, std::uint64_t seed) {
  const CarrierPtr& c = L.set.carrier();
  const SubsetPred& p = L.set.pred();
  CarrierPtr target;
  MapFn fn;
  if (p.kind == SubsetPred::BallLeq || p.kind == SubsetPred::BallLt) {
    if (!(p.radius == RatFunc::from_int(1)))
      throw PreconditionError("quotient_valuation: only unit-radius balls have a closed form");
    target = std::make_shared<AbsValueCarrier>();
    fn = [](const Elem& e) -> Elem { return std::get<RatFunc>(e).abs(); };
  } else if (p.kind == SubsetPred::OrdGeq || p.kind == SubsetPred::ZeroOnly) {
    target = std::make_shared<GradedCarrier>(false);
    if (p.kind == SubsetPred::ZeroOnly) {
      // [0 : x] is {0} for x != 0 and R for x = 0: two classes
      auto b = std::make_shared<FiniteSemiring>(
          "M(ratfunc;{0})", std::vector<std::string>{"0", "1"}, 0, 1,
          std::vector<int>{0, 1, 1, 1}, std::vector<int>{0, 0, 0, 1});
      target = b;
      fn = [b](const Elem& e) -> Elem {
        return std::get<RatFunc>(e).is_zero() ? b->zero() : b->one();
      };
    } else {
      fn = [](const Elem& e) -> Elem {
        const RatFunc& x = std::get<RatFunc>(e);
        if (x.is_zero()) return GradeElem{true, 0};
        return GradeElem{false, -x.ord()};
      };
    }
  } else {
    throw PreconditionError("quotient_valuation: unsupported predicate kind");
  }
  MultMap v = make_fn_map(c, target, fn, L.is_true ? MapKind::Mult01 : MapKind::MValuation,
                          "v_" + L.set.show());
  v.from = from_of(L.cls);
  v.from_subset = std::make_shared<Subset>(L.set);
  if (std::dynamic_pointer_cast<const AbsValueCarrier>(target)) {
    // section of |.|: a nonnegative representative is its own preimage
    v.section = [](const Elem& e) -> Elem { return e; };
  } else if (std::dynamic_pointer_cast<const FiniteSemiring>(target)) {
    // trivial-valuation target {0, 1}
    v.section = [target](const Elem& e) -> Elem {
      return target->is_zero(e) ? Elem{RatFunc{}} : Elem{RatFunc::from_int(1)};
    };
  } else if (std::dynamic_pointer_cast<const GradedCarrier>(target)) {
    // section of the grade map: u^k comes from t^-k
    v.section = [](const Elem& e) -> Elem {
      const GradeElem& g = std::get<GradeElem>(e);
      if (g.bottom) return RatFunc{};
      RatFunc t = RatFunc::t();
      RatFunc r = RatFunc::from_int(1);
      for (std::int64_t i = 0; i < (g.k < 0 ? -g.k : g.k); ++i) r = r * t;
      return g.k > 0 ? Elem{r.inverse()} : Elem{r};
    };
  }

  // sampled checks: v(x) <= v(y) iff [L:x] >= [L:y]; support = {0}
  auto es = c->sample(std::min<std::size_t>(budget, 20), seed);
  auto tleq = [&](const Elem& a, const Elem& b) { return *target->leq(a, b); };
  for (const Elem& x : es)
    for (const Elem& y : es) {
      Subset cx = colon_set(L.set, x), cy = colon_set(L.set, y);
      bool colon_ge = true;  // [L:x] >= [L:y] on the sample
      for (const Elem& z : es)
        if (cy.contains(z) && !cx.contains(z)) {
          colon_ge = false;
          break;
        }
      if (tleq(v(x), v(y)) && !colon_ge)
        throw std::logic_error("quotient_valuation: order disagrees with colon sets at (" +
                               c->show(x) + ", " + c->show(y) + ")");
    }
  for (const Elem& x : c->sample(budget, seed))
    if (target->is_zero(v(x)) != c->is_zero(x))
      throw std::logic_error("quotient_valuation: support must be {0} on the field");
  return v;
}

}  // namespace

MultMap quotient_valuation(const SubsetWitness& L) {
  if (L.cls == SubsetClass::Invalid)
    throw PreconditionError("quotient_valuation: INVALID subset (prime side: " + L.why_not_prime +
                            "; CMC side: " + L.why_not_cmc + ")");
  if (L.cmc_kind() && !L.proper)
    throw PreconditionError("quotient_valuation: CMC-kind subset must be proper (A != R)");
  if (L.set.carrier()->finite()) return quotient_valuation_finite(L);
  return quotient_valuation_ratfunc(L, 60, kDefaultSeed);
}

namespace {

Subset a_of_prime_raw(const Subset& p, std::size_t budget, std::uint64_t seed) {
  const CarrierPtr& c = p.carrier();
  if (p.finite_backed()) {
    const int n = static_cast<int>(c->size());
    std::vector<bool> bits(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j)
        if (p.contains(c->element(j)) && !p.contains(c->mul(c->element(i), c->element(j))))
          ok = false;
      bits[static_cast<std::size_t>(i)] = ok;
    }
    return Subset::of_bits(c, std::move(bits));
  }
  const SubsetPred& pr = p.pred();
  Subset out;
  if (pr.kind == SubsetPred::BallLt && pr.radius == RatFunc::from_int(1))
    out = Subset::of_pred(c, SubsetPred{SubsetPred::BallLeq, RatFunc::from_int(1), 0, std::nullopt});
  else if (pr.kind == SubsetPred::OrdGeq && pr.min_ord == 1)
    out = Subset::of_pred(c, SubsetPred{SubsetPred::OrdGeq, {}, 0, std::nullopt});
  else if (pr.kind == SubsetPred::ZeroOnly)
    out = Subset::all(c);
  else
    throw PreconditionError("a_of_prime: no closed form for this predicate");
  // sampled check of x p <= p
  auto es = c->sample(std::min<std::size_t>(budget, 48), seed);
  for (const Elem& x : es) {
    bool member = true;
    for (const Elem& q : es)
      if (p.contains(q) && !p.contains(c->mul(x, q))) {
        member = false;
        break;
      }
    // sound direction only: a violation found in the sample refutes membership
    if (out.contains(x) && !member)
      throw std::logic_error("a_of_prime: closed form too large at " + c->show(x));
  }
  return out;
}

Subset central_prime_raw(const Subset& A, std::size_t budget, std::uint64_t seed) {
  const CarrierPtr& c = A.carrier();
  if (A.finite_backed()) {
    const int n = static_cast<int>(c->size());
    std::vector<bool> bits(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      bool found = false;
      for (int j = 0; j < n && !found; ++j)
        if (!A.contains(c->element(j)) && A.contains(c->mul(c->element(i), c->element(j))))
          found = true;
      bits[static_cast<std::size_t>(i)] = found;
    }
    return Subset::of_bits(c, std::move(bits));
  }
  const SubsetPred& pr = A.pred();
  Subset out;
  if (pr.kind == SubsetPred::BallLeq && pr.radius == RatFunc::from_int(1))
    out = Subset::of_pred(c, SubsetPred{SubsetPred::BallLt, RatFunc::from_int(1), 0, std::nullopt});
  else if (pr.kind == SubsetPred::OrdGeq && pr.min_ord == 0)
    out = Subset::of_pred(c, SubsetPred{SubsetPred::OrdGeq, {}, 1, std::nullopt});
  else
    throw PreconditionError("central_prime: no closed form for this predicate");
  auto es = c->sample(std::min<std::size_t>(budget, 48), seed);
  for (const Elem& x : es) {
    if (!out.contains(x)) continue;
    // soundness direction: every claimed member has a witness y (search the
    // sample plus the canonical witness 1/x scaled away from the boundary)
    bool found = false;
    for (const Elem& y : es)
      if (!A.contains(y) && A.contains(c->mul(x, y))) {
        found = true;
        break;
      }
    if (!found) {
      const RatFunc& rx = std::get<RatFunc>(x);
      if (!rx.is_zero()) {
        RatFunc y = (rx.abs().inverse() + RatFunc::from_int(1)) * RatFunc::from_rational(Rational(1, 2));
        if (!A.contains(Elem{y}) && A.contains(c->mul(x, Elem{y}))) found = true;
      }
    }
    if (!found)
      throw std::logic_error("central_prime: no witness for member " + c->show(x));
  }
  return out;
}

}  // namespace

SubsetWitness central_prime(const SubsetWitness& A, std::size_t budget, std::uint64_t seed) {
  if (!A.cmc_kind()) throw PreconditionError("central_prime: input must be of CMC kind");
  if (!A.proper) throw PreconditionError("central_prime: input must be proper (A != R)");
  Subset raw = central_prime_raw(A.set, budget, seed);
  SubsetWitness out = classify_subset(raw, A.exponents, budget, seed);
  if (!out.prime_kind())
    throw std::logic_error("central_prime: P(A) failed prime classification (prime side: " +
                           out.why_not_prime + ")");
  if (A.set.carrier()->finite()) {
    for (const Elem& u : A.exponents) {
      bool found = false;
      for (const Elem& v : out.exponents)
        if (A.set.carrier()->eq(u, v)) found = true;
      if (!found)
        throw std::logic_error("central_prime: exponent of A is not an exponent of P(A)");
    }
  }
  return out;
}

SubsetWitness a_of_prime(const SubsetWitness& p, std::size_t budget, std::uint64_t seed) {
  if (!p.prime_kind()) throw PreconditionError("a_of_prime: input must be of prime kind");
  Subset raw = a_of_prime_raw(p.set, budget, seed);
  SubsetWitness out = classify_subset(raw, p.exponents, budget, seed);
  if (!out.cmc_kind())
    throw std::logic_error("a_of_prime: A(p) failed CMC classification (CMC side: " +
                           out.why_not_cmc + ")");
  if (p.set.carrier()->finite()) {
    for (const Elem& u : p.exponents) {
      bool found = false;
      for (const Elem& v : out.exponents)
        if (p.set.carrier()->eq(u, v)) found = true;
      if (!found) throw std::logic_error("a_of_prime: exponent of p is not an exponent of A(p)");
    }
  }
  return out;
}

std::pair<Subset, Subset> valuation_pair(const MultMap& v, std::size_t budget,
                                         std::uint64_t seed) {
  const CarrierPtr& src = v.source;
  const CarrierPtr& tgt = v.target;
  BipotentView tv = as_bipotent(tgt);
  const Elem one_t = tgt->one();

  Subset a_v, p_v;
  if (src->finite()) {
    const int n = static_cast<int>(src->size());
    std::vector<bool> ab(static_cast<std::size_t>(n)), pb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Elem val = v(src->element(i));
      ab[static_cast<std::size_t>(i)] = tv.leq(val, one_t);
      pb[static_cast<std::size_t>(i)] = tv.lt(val, one_t);
    }
    a_v = Subset::of_bits(src, std::move(ab));
    p_v = Subset::of_bits(src, std::move(pb));
  } else {
    if (std::dynamic_pointer_cast<const AbsValueCarrier>(tgt)) {
      a_v = Subset::of_pred(src, SubsetPred{SubsetPred::BallLeq, RatFunc::from_int(1), 0, std::nullopt});
      p_v = Subset::of_pred(src, SubsetPred{SubsetPred::BallLt, RatFunc::from_int(1), 0, std::nullopt});
    } else if (std::dynamic_pointer_cast<const GradedCarrier>(tgt)) {
      a_v = Subset::of_pred(src, SubsetPred{SubsetPred::OrdGeq, {}, 0, std::nullopt});
      p_v = Subset::of_pred(src, SubsetPred{SubsetPred::OrdGeq, {}, 1, std::nullopt});
    } else {
      throw PreconditionError("valuation_pair: no closed form for target " + tgt->name());
    }
    for (const Elem& x : src->sample(budget, seed)) {
      Elem val = v(x);
      if (a_v.contains(x) != tv.leq(val, one_t))
        throw std::logic_error("valuation_pair: A_v closed form disagrees at " + src->show(x));
      if (p_v.contains(x) != tv.lt(val, one_t))
        throw std::logic_error("valuation_pair: p_v closed form disagrees at " + src->show(x));
    }
  }

  // provenance assertions
  if ((v.from == MultMap::From::Prime || v.from == MultMap::From::PrimeSubset) && v.from_subset) {
    if (!p_v.same_as(*v.from_subset, budget, seed))
      throw std::logic_error("valuation_pair: p_v differs from the defining prime");
    Subset expect_a = a_of_prime_raw(*v.from_subset, budget, seed);
    if (!a_v.same_as(expect_a, budget, seed))
      throw std::logic_error("valuation_pair: A_v differs from [p:p]");
  }
  if ((v.from == MultMap::From::Cmc || v.from == MultMap::From::CmcSubset) && v.from_subset) {
    if (!a_v.same_as(*v.from_subset, budget, seed))
      throw std::logic_error("valuation_pair: A_v differs from the defining CMC-set");
    Subset expect_p = central_prime_raw(*v.from_subset, budget, seed);
    if (!p_v.same_as(expect_p, budget, seed))
      throw std::logic_error("valuation_pair: p_v differs from P(A)");
  }
  return {a_v, p_v};
}

DominanceResult dominates(const MultMap& v, const MultMap& w, std::size_t budget,
                          std::uint64_t seed) {
  if (v.source.get() != w.source.get())
    throw PreconditionError("dominates: maps must share a source");
  BipotentView tv = as_bipotent(v.target);
  BipotentView tw = as_bipotent(w.target);

  DominanceResult res;
  const Carrier& src = *v.source;
  auto pp = make_pairs(src, budget, seed);
  res.sampled = !src.finite();
  for (const auto& [i, j] : pp.pairs) {
    const Elem &a = pp.pool[i], &b = pp.pool[j];
    if (tv.leq(v(a), v(b)) && !tw.leq(w(a), w(b))) {
      res.holds = false;
      res.witness = "(" + src.show(a) + ", " + src.show(b) + ")";
      return res;
    }
  }
  res.holds = true;

  if (src.finite() && v.table && v.target->finite() && surjective_onto_finite(v)) {
    const int m = static_cast<int>(v.target->size());
    std::vector<Elem> gtable(static_cast<std::size_t>(m), w.target->zero());
    std::vector<bool> set(static_cast<std::size_t>(m), false);
    for (const Elem& a : all_elements(src)) {
      int i = fin(v(a));
      Elem val = w(a);
      if (!set[static_cast<std::size_t>(i)]) {
        gtable[static_cast<std::size_t>(i)] = val;
        set[static_cast<std::size_t>(i)] = true;
      } else if (!w.target->eq(gtable[static_cast<std::size_t>(i)], val)) {
        throw std::logic_error("dominates: factor map not well-defined");
      }
    }
    MultMap g = make_table_map(v.target, w.target, std::move(gtable), MapKind::Homomorphism,
                               "gamma_{" + w.label + "," + v.label + "}");
    // semiring homomorphism checks
    const Carrier& tc = *v.target;
    const Carrier& wc = *w.target;
    if (!wc.is_zero(g(tc.zero())) || !wc.is_one(g(tc.one())))
      throw std::logic_error("dominates: gamma does not fix 0/1");
    for (const Elem& x : all_elements(tc))
      for (const Elem& y : all_elements(tc)) {
        if (!wc.eq(g(tc.add(x, y)), wc.add(g(x), g(y))))
          throw std::logic_error("dominates: gamma not additive");
        if (!wc.eq(g(tc.mul(x, y)), wc.mul(g(x), g(y))))
          throw std::logic_error("dominates: gamma not multiplicative");
      }
    res.gamma = std::move(g);
  }
  return res;
}

EnvelopeCore envelope_core(const SubsetWitness& L, const Elem& u, std::size_t budget,
                           std::uint64_t seed) {
  const CarrierPtr& c = L.set.carrier();
  if (!c->invert(u)) throw PreconditionError("envelope_core: u is not a unit");
  bool u_is_exponent = false;
  for (const Elem& e : L.exponents)
    if (c->eq(e, u)) u_is_exponent = true;
  if (!u_is_exponent) throw PreconditionError("envelope_core: u is not an exponent of L");

  EnvelopeCore out;
  if (c->is_one(u)) {
    out.fixpoint = true;
    out.b = L;
    out.q = L;
    out.b_proper = L.proper;
    out.checks.add("hypothesis of the envelope/core theorem not met (L not true)", true);
    return out;
  }

  Subset bset, qset;
  if (c->finite()) {
    // multiplicative order of the unit u
    int d = 1;
    Elem p = u;
    while (!c->is_one(p)) {
      p = c->mul(p, u);
      ++d;
      if (d > static_cast<int>(c->size()) + 1)
        throw std::logic_error("envelope_core: unit power search did not cycle");
    }
    const int n = static_cast<int>(c->size());
    std::vector<bool> bb(static_cast<std::size_t>(n), false), qb(static_cast<std::size_t>(n), true);
    Elem uinv = *c->invert(u);
    for (int i = 0; i < n; ++i) {
      Elem x = c->element(i);
      Elem up = c->one();
      Elem uip = c->one();
      bool in_b = false, in_q = true;
      for (int s = 0; s < d; ++s) {
        if (L.set.contains(c->mul(up, x))) in_b = true;      // u^s x in L  <=>  x in u^-s L
        if (!L.set.contains(c->mul(uip, x))) in_q = false;   // u^-s x in L <=>  x in u^s L
        up = c->mul(up, u);
        uip = c->mul(uip, uinv);
      }
      bb[static_cast<std::size_t>(i)] = in_b;
      qb[static_cast<std::size_t>(i)] = in_q;
    }
    bset = Subset::of_bits(c, std::move(bb));
    qset = Subset::of_bits(c, std::move(qb));
  } else {
    const RatFunc& ru = std::get<RatFunc>(u);
    const SubsetPred& p = L.set.pred();
    if (p.kind != SubsetPred::BallLeq && p.kind != SubsetPred::BallLt)
      throw PreconditionError("envelope_core: closed form needs a unit ball subset");
    int k = ru.ord();
    if (k > 0) {
      bset = Subset::all(c);
      qset = Subset::zero_only(c);
    } else {
      // exponents satisfy |2u| <= 1, so ord(u) >= 0; at order 0 the envelope
      // is the t-adic valuation ring and the core its maximal ideal
      bset = Subset::of_pred(c, SubsetPred{SubsetPred::OrdGeq, {}, 0, std::nullopt});
      qset = Subset::of_pred(c, SubsetPred{SubsetPred::OrdGeq, {}, 1, std::nullopt});
    }
    // sampled membership check against the defining unions/intersections
    auto es = c->sample(std::min<std::size_t>(budget, 64), seed);
    Elem uinv = *c->invert(u);
    const int scan = 80;
    for (const Elem& x : es) {
      bool in_b = false;
      Elem up = c->one();
      for (int s = 0; s < scan && !in_b; ++s) {
        if (L.set.contains(c->mul(up, x))) in_b = true;
        up = c->mul(up, u);
      }
      if (in_b != bset.contains(x))
        throw std::logic_error("envelope_core: B closed form disagrees at " + c->show(x));
      bool in_q = true;
      Elem uip = c->one();
      for (int s = 0; s < scan && in_q; ++s) {
        if (!L.set.contains(c->mul(uip, x))) in_q = false;
        uip = c->mul(uip, uinv);
      }
      if (in_q != qset.contains(x))
        throw std::logic_error("envelope_core: Q closed form disagrees at " + c->show(x));
    }
  }

  out.b = classify_subset(bset, {c->one()}, budget, seed);
  out.q = classify_subset(qset, {c->one()}, budget, seed);
  out.b_proper = out.b.proper;
  Report& rep = out.checks;
  rep.exhaustive = c->finite();
  rep.add("B is a CMC-subsemiring", out.b.cls == SubsetClass::CmcSubsemiring ||
                                        (!out.b.proper && out.b.cmc_kind()));
  {
    bool contains = true;
    for (const Elem& x : sample_of(*c, std::min<std::size_t>(budget, 200), seed))
      if (L.set.contains(x) && !bset.contains(x)) contains = false;
    rep.add("B contains L", contains);
  }
  rep.add("Q is a prime", out.q.cls == SubsetClass::Prime);
  {
    bool contained = true;
    for (const Elem& x : sample_of(*c, std::min<std::size_t>(budget, 200), seed))
      if (qset.contains(x) && !L.set.contains(x)) contained = false;
    rep.add("Q contained in L", contained);
  }
  {
    bool ideal = true;
    auto pp = make_pairs(*c, budget, seed);
    for (const auto& [i, j] : pp.pairs) {
      const Elem &x = pp.pool[i], &y = pp.pool[j];
      if (bset.contains(x) && qset.contains(y) && !qset.contains(c->mul(x, y))) ideal = false;
    }
    rep.add("Q is a prime ideal of B", ideal && out.q.cls == SubsetClass::Prime);
  }
  // dominance and kernel equalities
  MultMap vL = quotient_valuation(L);
  MultMap vQ = quotient_valuation(out.q);
  auto dom_q = dominates(vL, vQ, budget, seed);
  rep.add("v_L dominates v_Q", dom_q.holds, dom_q.witness);
  {
    bool ker_eq = true;
    for (const Elem& x : sample_of(*c, std::min<std::size_t>(budget, 200), seed))
      if (vL.target->is_zero(vL(x)) != vQ.target->is_zero(vQ(x))) ker_eq = false;
    rep.add("ker v_L = ker v_Q", ker_eq);
  }
  if (out.b_proper) {
    MultMap vB = quotient_valuation(out.b);
    auto dom_b = dominates(vL, vB, budget, seed);
    rep.add("v_L dominates v_B", dom_b.holds, dom_b.witness);
    bool ker_eq = true;
    for (const Elem& x : sample_of(*c, std::min<std::size_t>(budget, 200), seed))
      if (vL.target->is_zero(vL(x)) != vB.target->is_zero(vB(x))) ker_eq = false;
    rep.add("ker v_L = ker v_B", ker_eq);
  }
  rep.require("envelope_core");
  return out;
}

namespace {

/// Order isomorphism gamma between the targets of two surjective finite maps
/// with gamma o v = w; nullopt when none exists.
std::optional<MultMap> equivalence_iso(const MultMap& v, const MultMap& w) {
  if (!v.source->finite() || !v.target->finite() || !w.target->finite()) return std::nullopt;
  const Carrier& tv = *v.target;
  const Carrier& tw = *w.target;
  if (tv.size() != tw.size()) return std::nullopt;
  std::vector<Elem> table(tv.size(), tw.zero());
  std::vector<bool> set(tv.size(), false);
  for (const Elem& a : all_elements(*v.source)) {
    int i = fin(v(a));
    if (!set[static_cast<std::size_t>(i)]) {
      table[static_cast<std::size_t>(i)] = w(a);
      set[static_cast<std::size_t>(i)] = true;
    } else if (!tw.eq(table[static_cast<std::size_t>(i)], w(a))) {
      return std::nullopt;  // not well-defined
    }
  }
  for (bool s : set)
    if (!s) return std::nullopt;  // v not surjective
  // bijective?
  std::vector<bool> hit(tw.size(), false);
  for (const Elem& e : table) {
    if (hit[static_cast<std::size_t>(fin(e))]) return std::nullopt;
    hit[static_cast<std::size_t>(fin(e))] = true;
  }
  BipotentView bv = as_bipotent(v.target), bw = as_bipotent(w.target);
  for (int i = 0; i < static_cast<int>(tv.size()); ++i)
    for (int j = 0; j < static_cast<int>(tv.size()); ++j) {
      Elem x = tv.element(i), y = tv.element(j);
      bool o1 = bv.leq(x, y);
      bool o2 = bw.leq(table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(j)]);
      if (o1 != o2) return std::nullopt;
    }
  for (int i = 0; i < static_cast<int>(tv.size()); ++i)
    for (int j = 0; j < static_cast<int>(tv.size()); ++j) {
      Elem p = tv.mul(tv.element(i), tv.element(j));
      Elem q = tw.mul(table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(j)]);
      if (!tw.eq(table[static_cast<std::size_t>(fin(p))], q)) return std::nullopt;
    }
  if (!tw.is_zero(table[static_cast<std::size_t>(fin(tv.zero()))])) return std::nullopt;
  if (!tw.is_one(table[static_cast<std::size_t>(fin(tv.one()))])) return std::nullopt;
  return make_table_map(v.target, w.target, std::move(table), MapKind::Homomorphism,
                        "iso_{" + v.label + "~" + w.label + "}");
}

}  // namespace

MultMap v0_coarsening(const MultMap& v) {
  check_mult01(v).require("v0_coarsening input");
  check_mvaluation(v).require("v0_coarsening input");
  auto [a_v, p_v] = valuation_pair(v);
  SubsetWitness pw = classify_subset(p_v);
  if (!pw.prime_kind()) throw std::logic_error("v0_coarsening: p_v is not a prime");
  MultMap w = quotient_valuation(pw);
  auto dom = dominates(v, w);
  if (!dom.holds) throw std::logic_error("v0_coarsening: v does not dominate v_{R,p_v}");
  if (v.source->finite() && v.target->finite() && surjective_onto_finite(v)) {
    // the coarsening is equivalent to gamma_v0(target) o v
    MultMap g0 = gamma_v0(as_bipotent(v.target));
    MultMap w2 = compose(g0, v);
    if (!equivalence_iso(w2, w))
      throw std::logic_error("v0_coarsening: not equivalent to gamma_v0 o v");
  }
  return w;
}

MultMap v_coarsening(const MultMap& v) {
  check_mult01(v).require("v_coarsening input");
  check_mvaluation(v).require("v_coarsening input");
  BipotentView tv = as_bipotent(v.target);
  bool proper = false;
  for (const Elem& x : sample_of(*v.target, 200, kDefaultSeed))
    if (tv.lt(v.target->one(), x)) proper = true;
  if (!proper) throw PreconditionError("v_coarsening: target is not proper");
  auto [a_v, p_v] = valuation_pair(v);
  SubsetWitness aw = classify_subset(a_v);
  if (!aw.cmc_kind() || !aw.proper)
    throw std::logic_error("v_coarsening: A_v is not a proper CMC-subsemiring");
  MultMap w = quotient_valuation(aw);
  auto dom = dominates(v, w);
  if (!dom.holds) throw std::logic_error("v_coarsening: v does not dominate v_{R,A_v}");
  if (v.source->finite() && v.target->finite() && surjective_onto_finite(v)) {
    MultMap g = gamma_v(as_bipotent(v.target));
    MultMap w2 = compose(g, v);
    if (!equivalence_iso(w2, w))
      throw std::logic_error("v_coarsening: not equivalent to gamma_v o v");
  }
  return w;
}

RecognizeResult recognize(const MultMap& v, RecognizeKind kind) {
  RecognizeResult res;
  if (!v.source->finite() || !v.target->finite())
    throw PreconditionError("recognize: implemented for finite carriers");
  if (!surjective_onto_finite(v)) throw PreconditionError("recognize: v must be surjective");
  check_mult01(v).require("recognize input");

  BipotentView tv = as_bipotent(v.target);
  BipotentClass cls = classify(tv);
  if (kind == RecognizeKind::V0 && !cls.sep_v0) {
    res.violated = "target fails Sep0_V";
    return res;
  }
  if (kind == RecognizeKind::V) {
    if (!cls.proper) {
      res.violated = "target is not proper";
      return res;
    }
    if (!cls.sep_v) {
      res.violated = "target fails Sep_V";
      return res;
    }
  }
  const Carrier& src = *v.source;
  const Elem one_t = v.target->one();
  auto below = [&](const Elem& a) {
    return kind == RecognizeKind::V0 ? tv.lt(v(a), one_t) : tv.leq(v(a), one_t);
  };
  for (const Elem& a : all_elements(src))
    for (const Elem& b : all_elements(src))
      if (below(a) && below(b) && !below(src.add(a, b))) {
        res.violated = std::string("additive rule fails at (") + src.show(a) + ", " + src.show(b) +
                       "): v(a+b) escapes " + (kind == RecognizeKind::V0 ? "{v < 1}" : "{v <= 1}");
        return res;
      }

  std::vector<bool> bits(src.size(), false);
  for (int i = 0; i < static_cast<int>(src.size()); ++i) bits[static_cast<std::size_t>(i)] = below(src.element(i));
  res.subset = Subset::of_bits(v.source, std::move(bits));
  SubsetWitness sw = classify_subset(res.subset);
  if (kind == RecognizeKind::V0 && sw.cls != SubsetClass::Prime)
    throw std::logic_error("recognize: {v<1} failed prime classification");
  if (kind == RecognizeKind::V && (sw.cls != SubsetClass::CmcSubsemiring || !sw.proper))
    throw std::logic_error("recognize: {v<=1} failed proper CMC classification");
  MultMap w = quotient_valuation(sw);
  auto iso = equivalence_iso(v, w);
  if (!iso) throw std::logic_error("recognize: no order isomorphism onto the quotient valuation");
  res.iso = std::move(iso);
  res.ok = true;
  return res;
}

Report check_mvaluation(const MultMap& v, std::size_t budget, std::uint64_t seed) {
  Report rep;
  rep.merge(check_mult01(v, budget, seed));
  BipotentView tv = as_bipotent(v.target);
  const Carrier& src = *v.source;
  auto pp = make_pairs(src, budget, seed);
  rep.exhaustive = rep.exhaustive && src.finite();
  std::string wit;
  bool ok = scan_pairs(
      pp,
      [&](const Elem& a, const Elem& b) {
        return tv.leq(v(src.add(a, b)), v.target->add(v(a), v(b)));
      },
      &wit, src);
  rep.add("subadditive", ok, ok ? "" : "witness " + wit);
  return rep;
}

Report check_exponent_bound(const MultMap& v, const Elem& u,
                            std::size_t budget, std::uint64_t seed) {
  Report rep;
  const Carrier& src = *v.source;
  auto uinv = src.invert(u);
  if (!uinv) throw PreconditionError("check_exponent_bound: u not a unit");
  BipotentView tv = as_bipotent(v.target);
  Elem bound_factor = v(*uinv);
  auto pp = make_pairs(src, budget, seed);
  rep.exhaustive = src.finite();
  std::string wit;
  bool ok = scan_pairs(
      pp,
      [&](const Elem& a, const Elem& b) {
        Elem lhs = v(src.add(a, b));
        Elem mx = tv.max(v(a), v(b));
        return tv.leq(lhs, v.target->mul(bound_factor, mx));
      },
      &wit, src);
  rep.add("v(x+y) <= v(u^-1) max(v(x), v(y))", ok, ok ? "" : "witness " + wit);
  return rep;
}

MultMap gamma_v0(const BipotentView& m) {
  if (!m.c->finite()) throw PreconditionError("gamma_v0: finite carriers only");
  const Carrier& c = *m.c;
  std::vector<bool> bits(c.size(), false);
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    bits[static_cast<std::size_t>(i)] = m.lt(c.element(i), c.one());
  SubsetWitness pw = classify_subset(Subset::of_bits(m.c, std::move(bits)));
  if (!pw.prime_kind()) throw std::logic_error("gamma_v0: {x < 1} is not a prime");
  MultMap g = quotient_valuation(pw);
  g.label = "gamma_V0_" + c.name();
  valuation_pair(g);  // asserts valuation semiring [p:p] and ideal p
  return g;
}

MultMap gamma_v(const BipotentView& m) {
  if (!m.c->finite()) throw PreconditionError("gamma_v: finite carriers only");
  const Carrier& c = *m.c;
  std::vector<bool> bits(c.size(), false);
  bool proper = false;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    bits[static_cast<std::size_t>(i)] = m.leq(c.element(i), c.one());
    if (!bits[static_cast<std::size_t>(i)]) proper = true;
  }
  if (!proper)
    throw PreconditionError("gamma_v: carrier not proper (every element is <= 1)");
  SubsetWitness aw = classify_subset(Subset::of_bits(m.c, std::move(bits)));
  if (aw.cls != SubsetClass::CmcSubsemiring)
    throw std::logic_error("gamma_v: A_M is not a CMC-subsemiring");
  MultMap g = quotient_valuation(aw);
  g.label = "gamma_V_" + c.name();
  valuation_pair(g);
  return g;
}

}  // namespace tropval
