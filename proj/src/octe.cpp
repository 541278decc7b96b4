#include "tropval/octe.hpp"

#include "tropval/axioms.hpp"
#include "tropval/detail/scan.hpp"

#include <algorithm>
#include <numeric>

namespace tropval {

using detail::make_pairs;
using detail::sample_of;
using detail::scan_pairs;

namespace {

OcteRelation finite_relation(const OrderedSupertropical& u, std::vector<int> class_of) {
  OcteRelation rel;
  rel.u = u;
  const CarrierPtr& c = u.st.u;
  rel.class_count = static_cast<std::size_t>(*std::max_element(class_of.begin(), class_of.end()) + 1);
  // representative = minimal index in the class
  std::vector<int> reps(rel.class_count, -1);
  for (int i = 0; i < static_cast<int>(class_of.size()); ++i)
    if (reps[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])] < 0)
      reps[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])] = i;
  auto cls = std::make_shared<std::vector<int>>(class_of);
  auto rp = std::make_shared<std::vector<int>>(reps);
  rel.same = [cls](const Elem& a, const Elem& b) {
    return (*cls)[static_cast<std::size_t>(fin(a))] == (*cls)[static_cast<std::size_t>(fin(b))];
  };
  rel.rep = [cls, rp, c](const Elem& a) -> Elem {
    return c->element((*rp)[static_cast<std::size_t>((*cls)[static_cast<std::size_t>(fin(a))])]);
  };
  rel.class_of = std::move(class_of);
  std::size_t nonzero = 0;
  for (int r : reps)
    if (!c->is_zero(c->element(r))) ++nonzero;
  rel.degenerate = nonzero <= 1;  // legal, flagged, excluded from corpus statistics
  return rel;
}

Report check_relation(const OrderedSupertropical& u,
                      const std::function<bool(const Elem&, const Elem&)>& same,
                      std::size_t budget, std::uint64_t seed) {
  Report rep;
  const CarrierPtr& c = u.st.u;
  auto pp = make_pairs(*c, budget, seed);
  rep.exhaustive = pp.exhaustive;
  std::string wit;

  bool mult = true;
  for (const auto& [i, j] : pp.pairs) {
    const Elem &x = pp.pool[i], &y = pp.pool[j];
    if (!same(x, y)) continue;
    for (const Elem& z : pp.pool)
      if (!same(c->mul(x, z), c->mul(y, z))) {
        mult = false;
        wit = "(" + c->show(x) + " ~ " + c->show(y) + ", z = " + c->show(z) + ")";
        break;
      }
    if (!mult) break;
  }
  rep.add("multiplicative", mult, mult ? "" : "witness " + wit);

  bool convex = true;
  for (const auto& [i, j] : pp.pairs) {
    const Elem &x = pp.pool[i], &y = pp.pool[j];
    if (!same(x, y) || c->eq(x, y)) continue;
    for (const Elem& z : pp.pool) {
      if (u.leq(x, z) && u.leq(z, y) && !same(x, z)) {
        convex = false;
        wit = "class of " + c->show(x) + " skips " + c->show(z) + " below " + c->show(y);
        break;
      }
    }
    if (!convex) break;
  }
  rep.add("classes are convex", convex, convex ? "" : "witness " + wit);

  bool te3 = true;
  for (const Elem& x : pp.pool)
    if (same(u.st.nu(x), c->zero()) && !same(x, c->zero())) {
      te3 = false;
      wit = "witness " + c->show(x);
      break;
    }
  rep.add("derived: ex ~ 0 implies x ~ 0", te3, te3 ? "" : wit);
  return rep;
}

}  // namespace

VerifiedOcte verify_octe(const OrderedSupertropical& u,
                         const std::vector<std::vector<int>>& partition, std::size_t budget,
                         std::uint64_t seed) {
  const CarrierPtr& c = u.st.u;
  if (!c->finite()) throw PreconditionError("verify_octe: partition form needs a finite carrier");
  std::vector<int> class_of(c->size(), -1);
  for (std::size_t k = 0; k < partition.size(); ++k)
    for (int i : partition[k]) {
      if (i < 0 || i >= static_cast<int>(c->size()) || class_of[static_cast<std::size_t>(i)] >= 0)
        throw PreconditionError("verify_octe: classes must partition the carrier");
      class_of[static_cast<std::size_t>(i)] = static_cast<int>(k);
    }
  for (int cl : class_of)
    if (cl < 0) throw PreconditionError("verify_octe: partition does not cover the carrier");

  OcteRelation rel = finite_relation(u, std::move(class_of));
  VerifiedOcte out;
  out.report = check_relation(u, rel.same, budget, seed);
  if (out.report.ok()) out.rel = std::move(rel);
  return out;
}

VerifiedOcte verify_octe_fn(const OrderedSupertropical& u,
                            std::function<bool(const Elem&, const Elem&)> same, MapFn rep,
                            std::size_t budget, std::uint64_t seed) {
  VerifiedOcte out;
  out.report = check_relation(u, same, budget, seed);
  if (!out.report.ok()) return out;
  OcteRelation rel;
  rel.u = u;
  rel.same = std::move(same);
  rel.rep = std::move(rep);
  // degeneracy probe on the sample: at most one nonzero class reachable?
  const CarrierPtr& c = u.st.u;
  std::vector<Elem> reps;
  for (const Elem& x : sample_of(*c, std::min<std::size_t>(budget, 64), seed)) {
    Elem r = rel.rep(x);
    bool seen = false;
    for (const Elem& o : reps)
      if (c->eq(o, r)) seen = true;
    if (!seen) reps.push_back(r);
  }
  std::size_t nonzero = 0;
  for (const Elem& r : reps)
    if (!c->is_zero(r)) ++nonzero;
  rel.degenerate = nonzero <= 1;
  out.rel = std::move(rel);
  return out;
}

OcteQuotient octe_quotient(const OcteRelation& e, std::size_t budget, std::uint64_t seed) {
  const CarrierPtr& c = e.u.st.u;
  OcteQuotient out;

  if (e.class_of) {
    if (e.class_count <= 1)
      throw PreconditionError("octe_quotient: single-class relation quotients to the zero ring");
    const auto& class_of = *e.class_of;
    const std::size_t k = e.class_count;
    std::vector<int> reps(k, -1);
    for (int i = 0; i < static_cast<int>(class_of.size()); ++i)
      if (reps[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])] < 0)
        reps[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])] = i;

    auto fs = std::dynamic_pointer_cast<const FiniteSemiring>(c);
    std::vector<std::string> names;
    for (int r : reps) names.push_back(fs ? fs->element_names()[static_cast<std::size_t>(r)]
                                          : c->show(c->element(r)));
    auto cls_of_elem = [&](const Elem& x) { return class_of[static_cast<std::size_t>(fin(x))]; };
    std::vector<int> qadd(k * k), qmul(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Elem a = c->element(reps[i]), b = c->element(reps[j]);
        qadd[i * k + j] = cls_of_elem(c->add(a, b));
        qmul[i * k + j] = cls_of_elem(c->mul(a, b));
      }
    // representative independence of both class operations
    for (const Elem& x : all_elements(*c))
      for (const Elem& y : all_elements(*c)) {
        if (cls_of_elem(c->add(x, y)) !=
            qadd[static_cast<std::size_t>(cls_of_elem(x)) * k + static_cast<std::size_t>(cls_of_elem(y))])
          throw std::logic_error("octe_quotient: class addition not well-defined");
        if (cls_of_elem(c->mul(x, y)) !=
            qmul[static_cast<std::size_t>(cls_of_elem(x)) * k + static_cast<std::size_t>(cls_of_elem(y))])
          throw std::logic_error("octe_quotient: class multiplication not well-defined");
      }
    auto quotient = std::make_shared<FiniteSemiring>(
        c->name() + "/E", std::move(names), cls_of_elem(c->zero()), cls_of_elem(c->one()),
        std::move(qadd), std::move(qmul));
    verify_semiring(*quotient).require("octe_quotient carrier");

    // class order induced by the base order; convexity makes this total
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return a != b && e.u.leq(c->element(reps[static_cast<std::size_t>(a)]),
                               c->element(reps[static_cast<std::size_t>(b)]));
    });
    std::vector<int> rank(k);
    for (std::size_t pos = 0; pos < k; ++pos) rank[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    for (const Elem& x : all_elements(*c))
      for (const Elem& y : all_elements(*c))
        if (e.u.leq(x, y) &&
            rank[static_cast<std::size_t>(cls_of_elem(x))] > rank[static_cast<std::size_t>(cls_of_elem(y))])
          throw std::logic_error("octe_quotient: class order not well-defined");

    auto vst = verify_supertropical(quotient, budget, seed);
    vst.report.require("octe_quotient supertropical check");
    auto vord = verify_total_order(*vst.view, rank, budget, seed);
    vord.report.require("octe_quotient order check");
    out.u = *vord.view;

    std::vector<Elem> table;
    for (int i = 0; i < static_cast<int>(c->size()); ++i)
      table.push_back(FinIdx{class_of[static_cast<std::size_t>(i)]});
    out.pi = make_table_map(c, quotient, std::move(table), MapKind::Homomorphism, "pi_E");
    auto reps_copy = std::make_shared<std::vector<int>>(reps);
    CarrierPtr base = c;
    out.pi.section = [reps_copy, base](const Elem& x) -> Elem {
      return base->element((*reps_copy)[static_cast<std::size_t>(fin(x))]);
    };
  } else {
    if (e.degenerate)
      throw PreconditionError("octe_quotient: degenerate symbolic relation");
    auto quotient = std::make_shared<NormalizedQuotientCarrier>(c->name() + "/E", c, e.rep);
    verify_semiring(*quotient, budget, seed).require("octe_quotient carrier");
    auto vst = verify_supertropical(quotient, budget, seed);
    vst.report.require("octe_quotient supertropical check");
    auto vord = verify_total_order(*vst.view, std::nullopt, budget, seed);
    vord.report.require("octe_quotient order check");
    out.u = *vord.view;
    out.pi = make_fn_map(c, quotient, e.rep, MapKind::Homomorphism, "pi_E");
    out.pi.section = [](const Elem& x) { return x; };
  }

  out.pi_flags = check_transmission(out.pi, e.u, out.u, budget, seed);
  if (!out.pi_flags.transmission || !out.pi_flags.homomorphism || !out.pi_flags.monotone)
    throw std::logic_error("octe_quotient: pi_E fails a transmission flag (" +
                           out.pi_flags.witness + ")");
  return out;
}

OcteRelation ideal_relation(const OrderedSupertropical& u, const Subset& ideal,
                            std::size_t budget, std::uint64_t seed) {
  const CarrierPtr& c = u.st.u;
  if (ideal.carrier().get() != c.get())
    throw PreconditionError("ideal_relation: subset lives on a different carrier");
  if (!ideal.contains(c->zero()))
    throw PreconditionError("ideal_relation: 0 must lie in the ideal");
  {
    auto pp = make_pairs(*c, budget, seed);
    std::string wit;
    if (!scan_pairs(
            pp,
            [&](const Elem& x, const Elem& y) {
              if (ideal.contains(x) && ideal.contains(y) && !ideal.contains(c->add(x, y)))
                return false;
              if (ideal.contains(x) && !ideal.contains(c->mul(x, y))) return false;
              return true;
            },
            &wit, *c))
      throw PreconditionError("ideal_relation: subset is not an ideal, witness " + wit);
  }

  if (c->finite()) {
    // threshold: the largest ghost companion of an ideal element
    Elem top = c->zero();
    for (const Elem& a : all_elements(*c))
      if (ideal.contains(a) && u.leq(top, u.st.nu(a))) top = u.st.nu(a);
    std::vector<int> class_of(c->size(), -1);
    int zero_class = 0;
    int next = 1;
    for (int i = 0; i < static_cast<int>(c->size()); ++i) {
      Elem x = c->element(i);
      if (u.leq(u.st.nu(x), top)) class_of[static_cast<std::size_t>(i)] = zero_class;
      else class_of[static_cast<std::size_t>(i)] = next++;
    }
    OcteRelation rel = finite_relation(u, std::move(class_of));
    auto chk = check_relation(u, rel.same, budget, seed);
    chk.require("ideal_relation");
    return rel;
  }

  // symbolic carriers: the collapsed class is {x : ex <= ea for some a}
  std::function<bool(const Elem&)> in_zero_class;
  if (ideal.finite_backed()) throw PreconditionError("ideal_relation: unexpected subset form");
  switch (ideal.pred().kind) {
    case SubsetPred::ZeroOnly:
      in_zero_class = [c](const Elem& x) { return c->is_zero(x); };
      break;
    case SubsetPred::GhostAtMost: {
      // the ghost image of the ideal is bounded by (and attains) the
      // predicate bound, so the collapsed class is the ideal itself
      Subset ideal_copy = ideal;
      in_zero_class = [ideal_copy](const Elem& x) { return ideal_copy.contains(x); };
      break;
    }
    case SubsetPred::All:
      in_zero_class = [](const Elem&) { return true; };
      break;
    default:
      throw PreconditionError("ideal_relation: no closed form for this ideal predicate");
  }
  auto same = [in_zero_class, c](const Elem& a, const Elem& b) {
    if (c->eq(a, b)) return true;
    return in_zero_class(a) && in_zero_class(b);
  };
  auto rep = [in_zero_class, c](const Elem& a) -> Elem {
    return in_zero_class(a) ? c->zero() : a;
  };
  auto ver = verify_octe_fn(u, same, rep, budget, seed);
  ver.report.require("ideal_relation");
  return *ver.rel;
}

FiberRelationResult fiber_relation(const OrderedSupertropical& u, const Subset& A,
                                   const std::optional<std::vector<std::vector<int>>>& phi,
                                   std::size_t budget, std::uint64_t seed) {
  const CarrierPtr& c = u.st.u;
  FiberRelationResult out;

  if (!c->finite()) {
    // closed form: A = U with the diagonal Phi merges each fiber into its ghost
    if (phi.has_value() || !A.is_all())
      throw PreconditionError("fiber_relation: symbolic carriers support only A = U with diagonal Phi");
    SupertropicalView st = u.st;
    auto same = [st](const Elem& a, const Elem& b) { return st.u->eq(st.nu(a), st.nu(b)); };
    auto rep = [st](const Elem& a) { return st.nu(a); };
    auto ver = verify_octe_fn(u, same, rep, budget, seed);
    ver.report.require("fiber_relation");
    out.rel = *ver.rel;
    return out;
  }

  const int n = static_cast<int>(c->size());
  // Phi: class id per ghost element (identity outside eU); diagonal if absent
  std::vector<int> phi_of(static_cast<std::size_t>(n));
  std::iota(phi_of.begin(), phi_of.end(), 0);
  if (phi) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::size_t k = 0; k < phi->size(); ++k)
      for (int i : (*phi)[k]) {
        if (!u.st.is_ghost_or_zero(c->element(i)))
          throw PreconditionError("fiber_relation: Phi must partition the ghost ideal");
        if (seen[static_cast<std::size_t>(i)])
          throw PreconditionError("fiber_relation: Phi classes overlap");
        seen[static_cast<std::size_t>(i)] = true;
        phi_of[static_cast<std::size_t>(i)] = (*phi)[k].empty() ? i : (*phi)[k][0];
      }
    for (int i = 0; i < n; ++i)
      if (u.st.is_ghost_or_zero(c->element(i)) && !seen[static_cast<std::size_t>(i)])
        throw PreconditionError("fiber_relation: Phi misses the ghost " + c->show(c->element(i)));
  }
  auto phi_same = [&](const Elem& a, const Elem& b) {
    return phi_of[static_cast<std::size_t>(fin(a))] == phi_of[static_cast<std::size_t>(fin(b))];
  };
  // Phi must be a homomorphic equivalence on eU: multiplicative with convex
  // classes and well-defined induced operations
  for (const Elem& x : all_elements(*c)) {
    if (!u.st.is_ghost_or_zero(x)) continue;
    for (const Elem& y : all_elements(*c)) {
      if (!u.st.is_ghost_or_zero(y) || !phi_same(x, y)) continue;
      for (const Elem& z : all_elements(*c)) {
        if (!u.st.is_ghost_or_zero(z)) continue;
        if (!phi_same(c->mul(x, z), c->mul(y, z)))
          throw PreconditionError("fiber_relation: Phi not multiplicative");
        if (!phi_same(c->add(x, z), c->add(y, z)))
          throw PreconditionError("fiber_relation: Phi addition not well-defined");
        if (u.leq(x, z) && u.leq(z, y) && !phi_same(x, z))
          throw PreconditionError("fiber_relation: Phi classes not convex");
      }
    }
  }
  for (const Elem& x : all_elements(*c))
    if (u.st.is_ghost_or_zero(x) && !A.contains(x))
      throw PreconditionError("fiber_relation: A must contain the ghost ideal");

  // fiber conditions
  auto fiber_of = [&](const Elem& g) {
    std::vector<Elem> f;
    for (const Elem& w : all_elements(*c))
      if (c->eq(u.st.nu(w), g)) f.push_back(w);
    std::sort(f.begin(), f.end(), [&](const Elem& a, const Elem& b) {
      return !c->eq(a, b) && u.leq(a, b);
    });
    return f;
  };
  for (const Elem& g : all_elements(*c)) {
    if (!u.st.is_ghost_or_zero(g) || c->is_zero(g)) continue;
    bool collapsed_from_below = false;
    for (const Elem& h : all_elements(*c))
      if (u.st.is_ghost_or_zero(h) && u.lt(h, g) && phi_same(g, h)) collapsed_from_below = true;
    auto fiber = fiber_of(g);
    if (collapsed_from_below) {
      for (const Elem& w : fiber)
        if (!A.contains(w)) {
          out.not_octe_witness = "condition (1) fails: fiber over " + c->show(g) +
                                 " leaves A at " + c->show(w);
          return out;
        }
    } else {
      // A must meet the fiber in an upper set
      for (std::size_t i = 0; i < fiber.size(); ++i)
        for (std::size_t j = i + 1; j < fiber.size(); ++j)
          if (A.contains(fiber[i]) && !A.contains(fiber[j])) {
            out.not_octe_witness = "condition (2) fails: " + c->show(fiber[i]) + " < " +
                                   c->show(fiber[j]) + " in the fiber over " + c->show(g) +
                                   " but only the lower one lies in A";
            return out;
          }
    }
  }

  // the fiber conditions hold; now insist on the ideal precondition
  {
    auto pp = make_pairs(*c, budget, seed);
    std::string wit;
    if (!scan_pairs(
            pp,
            [&](const Elem& x, const Elem& y) {
              if (A.contains(x) && A.contains(y) && !A.contains(c->add(x, y))) return false;
              if (A.contains(x) && !A.contains(c->mul(x, y))) return false;
              return true;
            },
            &wit, *c))
      throw PreconditionError("fiber_relation: A is not an ideal, witness " + wit);
  }

  // build E(U, A, Phi)
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (class_of[static_cast<std::size_t>(i)] >= 0) continue;
    class_of[static_cast<std::size_t>(i)] = next;
    Elem x = c->element(i);
    for (int j = i + 1; j < n; ++j) {
      Elem y = c->element(j);
      bool related = A.contains(x) && A.contains(y) &&
                     phi_of[static_cast<std::size_t>(fin(u.st.nu(x)))] ==
                         phi_of[static_cast<std::size_t>(fin(u.st.nu(y)))];
      if (related) class_of[static_cast<std::size_t>(j)] = next;
    }
    ++next;
  }
  OcteRelation rel = finite_relation(u, std::move(class_of));
  auto chk = check_relation(u, rel.same, budget, seed);
  chk.require("fiber_relation: conditions held but the relation is not OCTE");
  out.rel = std::move(rel);
  return out;
}

}  // namespace tropval
