#include "tropval/supertropical.hpp"

#include "tropval/axioms.hpp"
#include "tropval/detail/scan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropval {

using detail::make_pairs;
using detail::make_triples;
using detail::sample_of;
using detail::scan_pairs;
using detail::scan_triples;

VerifiedSupertropical verify_supertropical(CarrierPtr c, std::size_t budget,
                                           std::uint64_t seed) {
  VerifiedSupertropical out;
  Report& rep = out.report;
  Elem e = c->add(c->one(), c->one());
  SupertropicalView view{c, e};

  rep.add("e = 1+1 is multiplicatively idempotent", c->eq(c->mul(e, e), e));

  auto pp = make_pairs(*c, budget, seed);
  rep.exhaustive = pp.exhaustive;
  std::string wit;
  bool ghost_bipotent = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) {
        Elem gx = view.nu(x), gy = view.nu(y);
        Elem s = c->add(gx, gy);
        return c->eq(s, gx) || c->eq(s, gy);
      },
      &wit, *c);
  rep.add("ghost ideal eU is bipotent", ghost_bipotent, ghost_bipotent ? "" : "witness " + wit);

  bool kernel = true;
  std::string kwit;
  for (const Elem& x : pp.pool)
    if (c->is_zero(view.nu(x)) && !c->is_zero(x)) {
      kernel = false;
      kwit = "witness " + c->show(x);
      break;
    }
  rep.add("ex = 0 implies x = 0", kernel, kwit);

  if (ghost_bipotent) {
    bool rule = scan_pairs(
        pp,
        [&](const Elem& x, const Elem& y) {
          Elem gx = view.nu(x), gy = view.nu(y);
          Elem s = c->add(x, y);
          if (c->eq(gx, gy)) return c->eq(s, gx);
          bool x_le = c->eq(c->add(gx, gy), gy);
          return c->eq(s, x_le ? y : x);
        },
        &wit, *c);
    rep.add("three-case addition rule", rule, rule ? "" : "witness " + wit);
  }

  if (rep.ok()) out.view = view;
  return out;
}

bool OrderedSupertropical::leq(const Elem& a, const Elem& b) const {
  if (rank_of)
    return (*rank_of)[static_cast<std::size_t>(fin(a))] <=
           (*rank_of)[static_cast<std::size_t>(fin(b))];
  auto r = st.u->leq(a, b);
  if (!r) throw PreconditionError("ordered supertropical view has no usable order");
  return *r;
}

VerifiedOrder verify_total_order(const SupertropicalView& st,
                                 std::optional<std::vector<int>> rank_of, std::size_t budget,
                                 std::uint64_t seed) {
  VerifiedOrder out;
  Report& rep = out.report;
  const CarrierPtr& c = st.u;

  OrderedSupertropical ord;
  ord.st = st;
  ord.sampled = !c->finite();
  if (c->finite()) {
    if (!rank_of || rank_of->size() != c->size())
      throw PreconditionError("verify_total_order: finite carrier needs a full rank list");
    ord.rank_of = std::move(rank_of);
  } else if (!c->leq(c->zero(), c->one())) {
    throw PreconditionError("verify_total_order: infinite carrier without native order");
  }

  auto tp = make_triples(*c, budget, seed);
  auto pp = make_pairs(*c, budget, seed);
  rep.exhaustive = tp.exhaustive;
  std::string wit;

  bool ok = scan_triples(
      tp,
      [&](const Elem& x, const Elem& y, const Elem& z) {
        return !ord.leq(x, y) || ord.leq(c->add(x, z), c->add(y, z));
      },
      &wit, *c);
  rep.add("order compatible with addition", ok, ok ? "" : "witness " + wit);
  ok = scan_triples(
      tp,
      [&](const Elem& x, const Elem& y, const Elem& z) {
        return !ord.leq(x, y) || ord.leq(c->mul(x, z), c->mul(y, z));
      },
      &wit, *c);
  rep.add("order compatible with multiplication", ok, ok ? "" : "witness " + wit);
  ok = ord.leq(c->zero(), c->one());
  for (const Elem& z : pp.pool)
    if (!ord.leq(c->zero(), z)) ok = false;
  rep.add("0 <= 1 and 0 is least", ok);

  ok = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) {
        if (!st.is_ghost_or_zero(x) || !st.is_ghost_or_zero(y)) return true;
        return ord.leq(x, y) == c->eq(c->add(x, y), y);
      },
      &wit, *c);
  rep.add("restriction to eU is the bipotent order", ok, ok ? "" : "witness " + wit);

  // ghost map laws
  ok = true;
  for (const Elem& x : pp.pool)
    if (!c->eq(st.nu(st.nu(x)), st.nu(x))) {
      ok = false;
      wit = "witness " + c->show(x);
      break;
    }
  rep.add("Gh1: nu o nu = nu", ok, ok ? "" : wit);
  ok = true;
  for (const Elem& x : pp.pool)
    if (c->is_zero(st.nu(x)) != c->is_zero(x)) {
      ok = false;
      wit = "witness " + c->show(x);
      break;
    }
  rep.add("Gh2: nu^-1(0) = {0}", ok, ok ? "" : wit);
  ok = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) { return c->eq(st.nu(c->mul(x, y)), c->mul(st.nu(x), st.nu(y))); },
      &wit, *c);
  rep.add("Gh3: nu multiplicative", ok, ok ? "" : "witness " + wit);
  ok = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) { return !ord.leq(x, y) || ord.leq(st.nu(x), st.nu(y)); },
      &wit, *c);
  rep.add("Gh4: nu order preserving", ok, ok ? "" : "witness " + wit);
  ok = true;
  for (const Elem& x : pp.pool)
    if (!ord.leq(x, st.nu(x))) {
      ok = false;
      wit = "witness " + c->show(x);
      break;
    }
  rep.add("Gh5: x <= nu(x)", ok, ok ? "" : wit);

  ok = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) {
        Elem gx = st.nu(x), gy = st.nu(y);
        Elem expect;
        if (ord.lt(gx, gy)) expect = y;
        else if (ord.lt(gy, gx)) expect = x;
        else expect = gx;
        return c->eq(c->add(x, y), expect);
      },
      &wit, *c);
  rep.add("addition reconstructed from order and ghost map", ok, ok ? "" : "witness " + wit);

  ok = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) {
        if (!st.is_tangible(x) || !st.is_ghost_or_zero(y) || c->is_zero(y)) return true;
        return ord.leq(x, y) == ord.leq(st.nu(x), y);
      },
      &wit, *c);
  rep.add("tangible vs ghost: x <= y iff ex <= y", ok, ok ? "" : "witness " + wit);
  ok = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) {
        if (!st.is_ghost_or_zero(x) || c->is_zero(x) || !st.is_tangible(y)) return true;
        return ord.leq(x, y) == ord.lt(x, st.nu(y));
      },
      &wit, *c);
  rep.add("ghost vs tangible: x <= y iff x < ey", ok, ok ? "" : "witness " + wit);

  if (rep.ok()) out.view = ord;
  return out;
}

namespace {

void require_ostr_preconditions(const BipotentView& n, const BipotentView& m, const MultMap& v,
                                std::size_t budget, std::uint64_t seed) {
  if (v.source.get() != n.c.get() || v.target.get() != m.c.get())
    throw PreconditionError("build_ostr: map does not connect the given carriers");
  check_mult01(v, budget, seed).require("build_ostr connecting map");
  std::string wit;
  if (!is_cancellative(m, &wit, budget, seed))
    throw PreconditionError(
        "build_ostr: ghost monoid not cancellative (witness " + wit +
        "); a nontrivial finite ghost part cannot be cancellative - use a graded carrier");
  for (const Elem& x : sample_of(*n.c, budget, seed))
    if (m.c->is_zero(v(x)) && !n.c->is_zero(x))
      throw PreconditionError("build_ostr: connecting map has nontrivial kernel at " +
                              n.c->show(x));
  auto pp = make_pairs(*n.c, budget, seed);
  if (!scan_pairs(
          pp, [&](const Elem& x, const Elem& y) { return !n.leq(x, y) || m.leq(v(x), v(y)); },
          &wit, *n.c))
    throw PreconditionError("build_ostr: connecting map not order preserving, witness " + wit);
}

}  // namespace

OstrBuild build_ostr(const BipotentView& n, const BipotentView& m, const MultMap& v,
                     std::size_t budget, std::uint64_t seed) {
  require_ostr_preconditions(n, m, v, budget, seed);
  OstrBuild out;
  out.tan_carrier = n.c;
  out.ghost_carrier = m.c;
  out.rho = v;

  if (n.c->finite() && m.c->finite()) {
    const int nt = static_cast<int>(n.c->size());
    const int ng = static_cast<int>(m.c->size());
    // local element ids: 0, then tangibles (nonzero of N), then ghosts
    struct Local {
      int tag;  // 0 zero, 1 tangible, 2 ghost
      Elem base;
    };
    std::vector<Local> locals;
    locals.push_back({0, n.c->zero()});
    std::vector<int> tan_of(static_cast<std::size_t>(nt), -1);
    std::vector<int> gh_of(static_cast<std::size_t>(ng), -1);
    std::vector<std::string> names{"0"};
    for (int i = 0; i < nt; ++i) {
      Elem x = n.c->element(i);
      if (n.c->is_zero(x)) continue;
      tan_of[static_cast<std::size_t>(i)] = static_cast<int>(locals.size());
      names.push_back("t" + n.c->show(x));
      locals.push_back({1, x});
    }
    for (int i = 0; i < ng; ++i) {
      Elem x = m.c->element(i);
      if (m.c->is_zero(x)) continue;
      gh_of[static_cast<std::size_t>(i)] = static_cast<int>(locals.size());
      names.push_back("g" + m.c->show(x));
      locals.push_back({2, x});
    }
    const int sz = static_cast<int>(locals.size());
    auto ghost_value = [&](const Local& l) -> Elem {
      if (l.tag == 0) return m.c->zero();
      if (l.tag == 1) return v(l.base);
      return l.base;
    };
    auto local_index = [&](int tag, const Elem& base) -> int {
      if (tag == 0) return 0;
      if (tag == 1) return tan_of[static_cast<std::size_t>(fin(base))];
      return gh_of[static_cast<std::size_t>(fin(base))];
    };
    auto leq_local = [&](int a, int b) -> bool {
      const Local &x = locals[static_cast<std::size_t>(a)], &y = locals[static_cast<std::size_t>(b)];
      if (x.tag == 0) return true;
      if (y.tag == 0) return false;
      if (x.tag == y.tag) return x.tag == 1 ? n.leq(x.base, y.base) : m.leq(x.base, y.base);
      if (x.tag == 1) return m.leq(v(x.base), y.base);            // tangible vs ghost
      return m.leq(x.base, v(y.base)) && !m.c->eq(x.base, v(y.base));  // ghost vs tangible
    };
    std::vector<int> mul(static_cast<std::size_t>(sz) * static_cast<std::size_t>(sz));
    std::vector<int> add(mul.size());
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b) {
        const Local &x = locals[static_cast<std::size_t>(a)], &y = locals[static_cast<std::size_t>(b)];
        int prod;
        if (x.tag == 0 || y.tag == 0) prod = 0;
        else if (x.tag == 1 && y.tag == 1)
          prod = local_index(1, n.c->mul(x.base, y.base));
        else {
          Elem gx = ghost_value(x), gy = ghost_value(y);
          prod = local_index(2, m.c->mul(gx, gy));
        }
        mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(sz) + static_cast<std::size_t>(b)] = prod;
        Elem gx = ghost_value(x), gy = ghost_value(y);
        int sum;
        if (m.c->eq(gx, gy)) sum = x.tag == 0 ? 0 : local_index(2, gx);
        else if (m.leq(gx, gy)) sum = b;
        else sum = a;
        add[static_cast<std::size_t>(a) * static_cast<std::size_t>(sz) + static_cast<std::size_t>(b)] = sum;
      }
    auto carrier = std::make_shared<FiniteSemiring>(
        "OSTR(" + n.c->name() + "," + m.c->name() + ")", std::move(names), 0,
        local_index(1, n.c->one()), std::move(add), std::move(mul));
    verify_semiring(*carrier).require("build_ostr carrier");

    // rank from the extended-order comparator
    std::vector<int> order(static_cast<std::size_t>(sz));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return a != b && leq_local(a, b) && !leq_local(b, a); });
    std::vector<int> rank(static_cast<std::size_t>(sz));
    for (int pos = 0; pos < sz; ++pos) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;

    auto vst = verify_supertropical(carrier, budget, seed);
    vst.report.require("build_ostr supertropical check");
    auto vord = verify_total_order(*vst.view, rank, budget, seed);
    vord.report.require("build_ostr order check");
    out.u = *vord.view;

    std::vector<Elem> tan_table, gh_table;
    for (int i = 0; i < nt; ++i)
      tan_table.push_back(FinIdx{n.c->is_zero(n.c->element(i)) ? 0 : tan_of[static_cast<std::size_t>(i)]});
    for (int i = 0; i < ng; ++i)
      gh_table.push_back(FinIdx{m.c->is_zero(m.c->element(i)) ? 0 : gh_of[static_cast<std::size_t>(i)]});
    out.embed_tangible = make_table_map(n.c, carrier, std::move(tan_table), MapKind::Mult01,
                                        "tangible embedding");
    auto locals_copy = std::make_shared<std::vector<Local>>(locals);
    auto zero_n = n.c->zero();
    out.embed_tangible.section = [locals_copy, zero_n](const Elem& e) -> Elem {
      const Local& l = (*locals_copy)[static_cast<std::size_t>(fin(e))];
      return l.tag == 1 ? l.base : zero_n;
    };
    out.embed_ghost = make_table_map(m.c, carrier, std::move(gh_table), MapKind::Mult01,
                                     "ghost embedding");
    auto zero_m = m.c->zero();
    out.embed_ghost.section = [locals_copy, zero_m](const Elem& e) -> Elem {
      const Local& l = (*locals_copy)[static_cast<std::size_t>(fin(e))];
      return l.tag == 2 ? l.base : zero_m;
    };
    return out;
  }

  // symbolic carrier for infinite sides
  auto ost = std::make_shared<OstrCarrier>("OSTR(" + n.c->name() + "," + m.c->name() + ")",
                                           n.c, m.c, v.fn);
  auto vst = verify_supertropical(ost, budget, seed);
  vst.report.require("build_ostr supertropical check");
  auto vord = verify_total_order(*vst.view, std::nullopt, budget, seed);
  vord.report.require("build_ostr order check");
  out.u = *vord.view;

  CarrierPtr nc = n.c, mc = m.c;
  out.embed_tangible = make_fn_map(
      nc, ost,
      [nc](const Elem& x) -> Elem {
        if (nc->is_zero(x)) return STElem{STElem::Zero, FinIdx{0}};
        return STElem{STElem::Tangible, to_base(x)};
      },
      MapKind::Mult01, "tangible embedding");
  out.embed_tangible.section = [nc](const Elem& e) -> Elem {
    const STElem& s = std::get<STElem>(e);
    return s.tag == STElem::Tangible ? from_base(s.v) : nc->zero();
  };
  out.embed_ghost = make_fn_map(
      mc, ost,
      [mc](const Elem& x) -> Elem {
        if (mc->is_zero(x)) return STElem{STElem::Zero, FinIdx{0}};
        return STElem{STElem::Ghost, to_base(x)};
      },
      MapKind::Mult01, "ghost embedding");
  out.embed_ghost.section = [mc](const Elem& e) -> Elem {
    const STElem& s = std::get<STElem>(e);
    return s.tag == STElem::Ghost ? from_base(s.v) : mc->zero();
  };
  return out;
}

Supervaluation tangible_cover(const MultMap& w, const MultMap& rho, std::size_t budget,
                              std::uint64_t seed) {
  check_mult01(w, budget, seed).require("tangible_cover: w");
  check_mult01(rho, budget, seed).require("tangible_cover: rho");
  {
    // rho must be a semiring homomorphism
    auto pp = make_pairs(*rho.source, budget, seed);
    std::string wit;
    if (!scan_pairs(
            pp,
            [&](const Elem& x, const Elem& y) {
              return rho.target->eq(rho(rho.source->add(x, y)),
                                    rho.target->add(rho(x), rho(y)));
            },
            &wit, *rho.source))
      throw PreconditionError("tangible_cover: rho not additive, witness " + wit);
  }
  OstrBuild ob = build_ostr(as_bipotent(w.target), as_bipotent(rho.target), rho, budget, seed);
  Supervaluation sv;
  sv.phi = compose(ob.embed_tangible, w);
  sv.phi.label = "phi[" + w.label + "]";
  sv.w = w;
  sv.cover = compose(rho, w);
  sv.build = std::move(ob);

  const Carrier& u = *sv.build.u.st.u;
  const Elem e = sv.build.u.st.e;
  for (const Elem& a : sample_of(*w.source, budget, seed)) {
    Elem pa = sv.phi(a);
    if (!u.eq(pa, u.zero()) && sv.build.u.st.is_ghost_or_zero(pa))
      throw std::logic_error("tangible_cover: image not tangible at " + w.source->show(a));
    Elem lhs = u.mul(e, pa);
    Elem rhs = sv.build.embed_ghost(sv.cover(a));
    if (!u.eq(lhs, rhs))
      throw std::logic_error("tangible_cover: e o phi differs from rho o w at " +
                             w.source->show(a));
  }
  if (check_mvaluation(w, budget, seed).ok()) {
    auto pp = make_pairs(*w.source, budget, seed);
    std::string wit;
    if (!scan_pairs(
            pp,
            [&](const Elem& a, const Elem& b) {
              Elem s = sv.phi(w.source->add(a, b));
              return sv.build.u.leq(s, sv.build.u.max(sv.phi(a), sv.phi(b)));
            },
            &wit, *w.source))
      throw std::logic_error("tangible_cover: not ultrametric, witness " + wit);
  }
  return sv;
}

Supervaluation build_phi_L(const SubsetWitness& L, const Elem& u, EnvelopeSide side,
                           std::size_t budget, std::uint64_t seed) {
  if (!L.is_true)
    throw PreconditionError("build_phi_L: L not true (admits exponent 1)");
  bool is_exp = false;
  for (const Elem& e : L.exponents)
    if (L.set.carrier()->eq(e, u)) is_exp = true;
  if (!is_exp) throw PreconditionError("build_phi_L: u is not an exponent of L");

  MultMap w = quotient_valuation(L);
  EnvelopeCore ec = envelope_core(L, u, budget, seed);
  const SubsetWitness& target_set = side == EnvelopeSide::Q ? ec.q : ec.b;
  if (side == EnvelopeSide::B && !ec.b_proper)
    throw PreconditionError("build_phi_L: B_u(L) = R, the envelope-side supervaluation is undefined");

  MultMap vsub = quotient_valuation(target_set);
  CancelQuotient cq = cancellative_quotient(as_bipotent(vsub.target));
  MultMap vc = compose(cq.pi, vsub);
  vc.section = nullptr;
  if (vsub.section && cq.pi.section) {
    MapFn s1 = vsub.section, s2 = cq.pi.section;
    vc.section = [s1, s2](const Elem& m) { return s1(s2(m)); };
  }
  if (!w.section)
    throw PreconditionError("build_phi_L: v_L carries no section");
  // rho(r) := (v/C)(section_w(r)); well-defined because v_L dominates both
  // envelope valuations with equal kernels
  MapFn ws = w.section;
  MapFn vcf = vc.fn;
  MultMap rho = make_fn_map(w.target, vc.target,
                            [ws, vcf](const Elem& r) { return vcf(ws(r)); }, MapKind::Homomorphism,
                            "rho[" + target_set.set.show() + "]");
  if (w.target->finite()) {
    std::vector<Elem> tbl;
    for (const Elem& r : all_elements(*w.target)) tbl.push_back(rho(r));
    rho = make_table_map(w.target, vc.target, std::move(tbl), MapKind::Homomorphism, rho.label);
  }
  if (vc.section) {
    MapFn wf = w.fn, vs = vc.section;
    rho.section = [wf, vs](const Elem& m) { return wf(vs(m)); };
  }
  for (const Elem& a : sample_of(*w.source, budget, seed))
    if (!vc.target->eq(rho(w(a)), vc(a)))
      throw std::logic_error("build_phi_L: rho o v_L differs from the envelope valuation");

  Supervaluation sv = tangible_cover(w, rho, budget, seed);
  sv.phi.label = (side == EnvelopeSide::Q ? "phi_" : "psi_") + L.set.show();

  auto uinv = L.set.carrier()->invert(u);
  Elem constant = sv.phi(*uinv);
  std::string wit;
  if (!artinian_with_constant(sv, constant, &wit, budget, seed))
    throw std::logic_error("build_phi_L: not artinian with constant phi(u^-1), witness " + wit);
  return sv;
}

SupervalClass classify_supervaluation(const Supervaluation& sv, std::size_t budget,
                                      std::uint64_t seed) {
  SupervalClass out;
  const Carrier& src = *sv.phi.source;
  const Carrier& u = *sv.build.u.st.u;
  const SupertropicalView& st = sv.build.u.st;
  out.sampled = !src.finite() || !u.finite();

  out.tangible = true;
  for (const Elem& a : sample_of(src, budget, seed)) {
    Elem pa = sv.phi(a);
    if (!u.is_zero(pa) && st.is_ghost_or_zero(pa)) out.tangible = false;
  }
  auto pp = make_pairs(src, budget, seed);
  out.ultrametric = scan_pairs(
      pp,
      [&](const Elem& a, const Elem& b) {
        return sv.build.u.leq(sv.phi(src.add(a, b)), sv.build.u.max(sv.phi(a), sv.phi(b)));
      },
      nullptr, src);

  if (u.finite()) {
    for (const Elem& c : finite_units(u)) {
      std::string wit;
      if (artinian_with_constant(sv, c, &wit, budget, seed)) out.artinian_constants.push_back(c);
    }
    if (!out.artinian_constants.empty()) {
      // least constant in the target order
      Elem best = out.artinian_constants.front();
      for (const Elem& c : out.artinian_constants)
        if (sv.build.u.lt(c, best)) best = c;
      out.least_constant = best;
    }
    return out;
  }

  // sampled least bound, maximizing the additive defect in the tangible side
  const CarrierPtr& nc = sv.build.tan_carrier;
  std::optional<Elem> best;  // element of N
  for (const auto& [i, j] : pp.pairs) {
    const Elem &a = pp.pool[i], &b = pp.pool[j];
    Elem ws = sv.w(src.add(a, b));
    Elem wa = sv.w(a), wb = sv.w(b);
    Elem mx = *nc->leq(wa, wb) ? wb : wa;
    if (nc->is_zero(mx)) continue;
    Elem needed;
    if (const auto* abs = dynamic_cast<const AbsValueCarrier*>(nc.get())) {
      (void)abs;
      needed = std::get<RatFunc>(ws) / std::get<RatFunc>(mx);
    } else if (dynamic_cast<const GradedCarrier*>(nc.get())) {
      const GradeElem& gs = std::get<GradeElem>(ws);
      const GradeElem& gm = std::get<GradeElem>(mx);
      if (gs.bottom) continue;
      needed = GradeElem{false, gs.k - gm.k};
    } else {
      continue;
    }
    if (!best || *nc->leq(*best, needed)) best = needed;
  }
  if (best && !nc->is_zero(*best))
    out.least_constant = sv.build.embed_tangible(*best);
  return out;
}

bool artinian_with_constant(const Supervaluation& sv, const Elem& c, std::string* witness,
                            std::size_t budget, std::uint64_t seed) {
  const Carrier& src = *sv.phi.source;
  const Carrier& u = *sv.build.u.st.u;
  auto pp = make_pairs(src, budget, seed);
  return scan_pairs(
      pp,
      [&](const Elem& a, const Elem& b) {
        Elem lhs = sv.phi(src.add(a, b));
        Elem rhs = u.mul(c, sv.build.u.max(sv.phi(a), sv.phi(b)));
        return sv.build.u.leq(lhs, rhs);
      },
      witness, src);
}

Prop422Result check_prop_4_22(const Supervaluation& sv, const Elem& c, const Elem& uu,
                              std::size_t budget, std::uint64_t seed) {
  Prop422Result out;
  const Carrier& u = *sv.build.u.st.u;
  const Carrier& src = *sv.phi.source;
  auto cinv = u.invert(c);
  if (!cinv) {
    out.hypothesis_failure = "c is not a unit of the target";
    return out;
  }
  if (!sv.build.u.lt(sv.build.u.st.e, c)) {
    out.hypothesis_failure = "c is not above e";
    return out;
  }
  if (!src.invert(uu)) {
    out.hypothesis_failure = "uu is not a unit of the source";
    return out;
  }
  if (!sv.build.u.leq(sv.phi(uu), *cinv)) {
    out.hypothesis_failure = "phi(uu) is not below c^-1";
    return out;
  }
  out.hypotheses_met = true;

  std::string wit;
  bool art = artinian_with_constant(sv, c, &wit, budget, seed);
  out.conclusions.add("phi artinian with constant c", art, art ? "" : "witness " + wit);

  auto [a_phi, p_phi] = valuation_pair(sv.w, budget, seed);
  SubsetWitness pw = classify_subset(p_phi, {uu}, budget, seed);
  bool p_ok = pw.prime_kind();
  bool p_exp = false;
  for (const Elem& e : pw.exponents)
    if (src.eq(e, uu)) p_exp = true;
  out.conclusions.add("p_phi is a prime subset with exponent uu", p_ok && p_exp);
  SubsetWitness aw = classify_subset(a_phi, {uu}, budget, seed);
  bool a_ok = aw.cmc_kind();
  bool a_exp = false;
  for (const Elem& e : aw.exponents)
    if (src.eq(e, uu)) a_exp = true;
  out.conclusions.add("A_phi is a CMC-subset with exponent uu", a_ok && a_exp);
  out.conclusions.exhaustive = src.finite();
  return out;
}

TransmissionFlags check_transmission(const MultMap& alpha, const OrderedSupertropical& u,
                                     const OrderedSupertropical& v, std::size_t budget,
                                     std::uint64_t seed) {
  TransmissionFlags out;
  const Carrier& cu = *u.st.u;
  const Carrier& cv = *v.st.u;
  auto pp = make_pairs(cu, budget, seed);
  std::string wit;

  out.multiplicative = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) {
        return cv.eq(alpha(cu.mul(x, y)), cv.mul(alpha(x), alpha(y)));
      },
      &wit, cu);
  if (!out.multiplicative) out.witness = "not multiplicative, witness " + wit;

  bool fixes = cv.is_zero(alpha(cu.zero())) && cv.is_one(alpha(cu.one())) &&
               cv.eq(alpha(u.st.e), v.st.e);
  bool ghost_to_ghost = true;
  for (const Elem& x : pp.pool)
    if (u.st.is_ghost_or_zero(x) && !v.st.is_ghost_or_zero(alpha(x))) ghost_to_ghost = false;
  bool ghost_additive = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) {
        if (!u.st.is_ghost_or_zero(x) || !u.st.is_ghost_or_zero(y)) return true;
        return cv.eq(alpha(cu.add(x, y)), cv.add(alpha(x), alpha(y)));
      },
      nullptr, cu);
  out.transmission = out.multiplicative && fixes && ghost_to_ghost && ghost_additive;

  bool additive = scan_pairs(
      pp,
      [&](const Elem& x, const Elem& y) {
        return cv.eq(alpha(cu.add(x, y)), cv.add(alpha(x), alpha(y)));
      },
      &wit, cu);
  out.homomorphism = out.multiplicative && additive && cv.is_zero(alpha(cu.zero())) &&
                     cv.is_one(alpha(cu.one()));

  out.monotone = scan_pairs(
      pp, [&](const Elem& x, const Elem& y) { return !u.leq(x, y) || v.leq(alpha(x), alpha(y)); },
      &wit, cu);
  if (!out.monotone && out.witness.empty()) out.witness = "not order preserving, witness " + wit;

  if (out.multiplicative && out.monotone) {
    Report& r = out.thm53;
    r.exhaustive = pp.exhaustive;
    bool c1 = fixes, c2 = out.homomorphism, c3 = out.transmission;
    r.add("(1) fixes 0, 1, e", c1);
    r.add("(2) semiring homomorphism", c2);
    r.add("(3) transmission", c3);
    if (c1 != c2 || c2 != c3)
      throw std::logic_error(
          "check_transmission: the three monotone-transmission conditions disagree");
  }
  return out;
}

namespace {

std::optional<MultMap> extract_transmission(const Supervaluation& phi, const Supervaluation& psi,
                                            std::size_t budget, std::uint64_t seed) {
  const CarrierPtr& cu = phi.build.u.st.u;
  const CarrierPtr& cv = psi.build.u.st.u;
  const Carrier& src = *phi.phi.source;
  if (cu->finite() && src.finite()) {
    std::vector<Elem> table(cu->size(), cv->zero());
    std::vector<bool> set(cu->size(), false);
    auto put = [&](const Elem& from, const Elem& to) {
      int i = fin(from);
      if (!set[static_cast<std::size_t>(i)]) {
        table[static_cast<std::size_t>(i)] = to;
        set[static_cast<std::size_t>(i)] = true;
      } else if (!cv->eq(table[static_cast<std::size_t>(i)], to)) {
        throw std::logic_error("dominance: transmission not well-defined");
      }
    };
    for (const Elem& a : all_elements(src)) {
      put(phi.phi(a), psi.phi(a));
      put(cu->mul(phi.build.u.st.e, phi.phi(a)), cv->mul(psi.build.u.st.e, psi.phi(a)));
    }
    for (bool s : set)
      if (!s) return std::nullopt;  // phi not surjective as a supervaluation
    return make_table_map(cu, cv, std::move(table), MapKind::Mult01, "alpha");
  }
  // infinite case: pull back through the construction sections
  if (!phi.w.section || !phi.cover.section) return std::nullopt;
  MapFn wsec = phi.w.section, csec = phi.cover.section;
  MultMap psi_phi = psi.phi;
  MultMap psi_cover_embed = compose(psi.build.embed_ghost, psi.cover);
  CarrierPtr cvp = cv;
  MapFn alpha = [wsec, csec, psi_phi, psi_cover_embed, cvp](const Elem& x) -> Elem {
    const STElem& s = std::get<STElem>(x);
    if (s.tag == STElem::Zero) return cvp->zero();
    if (s.tag == STElem::Tangible) return psi_phi(wsec(from_base(s.v)));
    return psi_cover_embed(csec(from_base(s.v)));
  };
  (void)budget;
  (void)seed;
  return make_fn_map(cu, cv, alpha, MapKind::Mult01, "alpha");
}

}  // namespace

SupervalDominance dominance(const Supervaluation& phi, const Supervaluation& psi,
                            DominanceMode mode, std::size_t budget, std::uint64_t seed) {
  if (phi.phi.source.get() != psi.phi.source.get())
    throw PreconditionError("dominance: supervaluations must share a source");
  const Carrier& src = *phi.phi.source;
  const Carrier& cu = *phi.build.u.st.u;
  const Carrier& cv = *psi.build.u.st.u;
  const SupertropicalView& stu = phi.build.u.st;
  const SupertropicalView& stv = psi.build.u.st;

  SupervalDominance out;
  out.sampled = !src.finite();
  auto pp = make_pairs(src, budget, seed);

  auto d1 = [&](const Elem& a, const Elem& b) {
    return !cu.eq(phi.phi(a), phi.phi(b)) || cv.eq(psi.phi(a), psi.phi(b));
  };
  auto d1p = [&](const Elem& a, const Elem& b) {
    return !phi.build.u.leq(phi.phi(a), phi.phi(b)) || psi.build.u.leq(psi.phi(a), psi.phi(b));
  };
  auto egs = [&](const SupertropicalView& st, const MultMap& f, const Elem& a) {
    return st.u->mul(st.e, f(a));
  };
  auto d2 = [&](const Elem& a, const Elem& b) {
    return !phi.build.u.leq(egs(stu, phi.phi, a), egs(stu, phi.phi, b)) ||
           psi.build.u.leq(egs(stv, psi.phi, a), egs(stv, psi.phi, b));
  };
  auto d2p = [&](const Elem& a, const Elem& b) {
    return !cu.eq(egs(stu, phi.phi, a), egs(stu, phi.phi, b)) ||
           cv.eq(egs(stv, psi.phi, a), egs(stv, psi.phi, b));
  };
  bool d3 = true;
  std::string wit3;
  for (const Elem& a : pp.pool)
    if (stu.is_ghost_or_zero(phi.phi(a)) && !stv.is_ghost_or_zero(psi.phi(a))) {
      d3 = false;
      wit3 = src.show(a);
      break;
    }

  std::string wit;
  if (mode == DominanceMode::Plain) {
    if (!scan_pairs(pp, d1, &wit, src)) {
      out.witness = "D1 fails at " + wit;
      return out;
    }
    if (!scan_pairs(pp, d2, &wit, src)) {
      out.witness = "D2 fails at " + wit;
      return out;
    }
    if (!d3) {
      out.witness = "D3 fails at " + wit3;
      return out;
    }
  } else {
    if (!scan_pairs(pp, d1p, &wit, src)) {
      out.witness = "D1' fails at " + wit;
      return out;
    }
    if (!scan_pairs(pp, d2p, &wit, src)) {
      out.witness = "D2' fails at " + wit;
      return out;
    }
    if (!d3) {
      out.witness = "D3 fails at " + wit3;
      return out;
    }
    // D1' and D2' together must imply D2, and total dominance implies plain
    if (!scan_pairs(pp, d2, &wit, src))
      throw std::logic_error("dominance: D1' and D2' hold but D2 fails at " + wit);
    if (!scan_pairs(pp, d1, &wit, src))
      throw std::logic_error("dominance: total dominance without plain dominance at " + wit);
  }
  out.holds = true;

  auto alpha = extract_transmission(phi, psi, budget, seed);
  if (alpha) {
    for (const Elem& a : pp.pool)
      if (!cv.eq((*alpha)(phi.phi(a)), psi.phi(a)))
        throw std::logic_error("dominance: alpha o phi differs from psi at " + src.show(a));
    auto flags = check_transmission(*alpha, phi.build.u, psi.build.u, budget, seed);
    if (!flags.transmission)
      throw std::logic_error("dominance: extracted map is not a transmission (" + flags.witness + ")");
    // The primed axioms make alpha monotone on tangible-tangible, ghost-ghost
    // and tangible-ghost pairs, but a ghost-tangible pair can lose
    // monotonicity when the dominated side collapses a strict ghost
    // inequality; flags.monotone records which case occurred.
    out.alpha = std::move(alpha);
    out.alpha_flags = std::move(flags);
  }
  return out;
}

Report check_example_5_9(const SubsetWitness& L, const Elem& u, const Elem& g,
                         std::size_t budget, std::uint64_t seed) {
  Report rep;
  const CarrierPtr& c = L.set.carrier();
  rep.exhaustive = c->finite();
  if (!c->invert(g) || !L.set.contains(g)) {
    rep.add("hypothesis: g is a unit lying in L", false,
            !c->invert(g) ? "g is not a unit" : "g lies outside L");
    return rep;
  }
  rep.add("hypothesis: g is a unit lying in L", true);

  Elem f = c->mul(u, g);
  SubsetWitness Lf = classify_subset(L.set, {f}, budget, seed);
  bool f_exp = false;
  for (const Elem& e : Lf.exponents)
    if (c->eq(e, f)) f_exp = true;
  rep.add("f = u g is an exponent of L", f_exp);
  if (!f_exp) return rep;

  EnvelopeCore ecu = envelope_core(L, u, budget, seed);
  SubsetWitness Lcopy = L;
  if (!c->finite()) Lcopy.exponents = {u, f};
  EnvelopeCore ecf = envelope_core(Lcopy, f, budget, seed);

  // B_f = union g^-n B_u and Q_f = intersection g^n Q_u, on the sample
  const int scan = 60;
  Elem ginv = *c->invert(g);
  bool b_ok = true, q_ok = true;
  for (const Elem& x : sample_of(*c, std::min<std::size_t>(budget, 64), seed)) {
    bool in_union = false;
    Elem gp = c->one();
    for (int s = 0; s < scan && !in_union; ++s) {
      if (ecu.b.set.contains(c->mul(gp, x))) in_union = true;
      gp = c->mul(gp, g);
    }
    if (in_union != ecf.b.set.contains(x)) b_ok = false;
    bool in_inter = true;
    Elem gi = c->one();
    for (int s = 0; s < scan && in_inter; ++s) {
      if (!ecu.q.set.contains(c->mul(gi, x))) in_inter = false;
      gi = c->mul(gi, ginv);
    }
    if (in_inter != ecf.q.set.contains(x)) q_ok = false;
  }
  rep.add("B_f(L) = union of g^-n B_u(L)", b_ok);
  rep.add("Q_f(L) = intersection of g^n Q_u(L)", q_ok);

  Supervaluation phi_u = build_phi_L(L, u, EnvelopeSide::Q, budget, seed);
  Supervaluation phi_f = build_phi_L(Lcopy, f, EnvelopeSide::Q, budget, seed);
  auto dom = dominance(phi_u, phi_f, DominanceMode::Total, budget, seed);
  rep.add("phi_{L,u} totally dominates phi_{L,f}", dom.holds, dom.witness);

  if (ecf.b_proper) {
    Supervaluation psi_u = build_phi_L(L, u, EnvelopeSide::B, budget, seed);
    Supervaluation psi_f = build_phi_L(Lcopy, f, EnvelopeSide::B, budget, seed);
    auto domb = dominance(psi_u, psi_f, DominanceMode::Total, budget, seed);
    rep.add("psi_{L,u} totally dominates psi_{L,f}", domb.holds, domb.witness);
  } else {
    rep.add("psi side skipped: B_f(L) = R", true);
  }
  return rep;
}

}  // namespace tropval
