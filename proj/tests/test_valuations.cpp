#include <doctest.h>

#include "tropval/fixtures.hpp"
#include "tropval/valuation.hpp"

using namespace tropval;

namespace {

SubsetWitness sub(const FiniteSemiringPtr& c, std::vector<int> idx) {
  return classify_subset(Subset::of_indices(c, idx));
}

std::vector<std::string> images(const MultMap& v) {
  std::vector<std::string> out;
  for (const Elem& e : all_elements(*v.source)) out.push_back(v.target->show(v(e)));
  return out;
}

Subset unit_ball(const CarrierPtr& rf, bool closed) {
  return Subset::of_pred(rf, SubsetPred{closed ? SubsetPred::BallLeq : SubsetPred::BallLt,
                                        RatFunc::from_int(1), 0, std::nullopt});
}

const std::vector<Elem> kHalf = {RatFunc::from_rational(Rational(1, 2))};

}  // namespace

TEST_CASE("classify_subset on M4") {
  auto m4 = fixtures::m4();
  auto p = sub(m4, {0, 1});  // {0, a}
  CHECK(p.cls == SubsetClass::Prime);
  REQUIRE(p.exponents.size() == 1);
  CHECK(m4->is_one(p.exponents[0]));
  CHECK(!p.is_true);

  // {0, 1} is no prime (contains 1) but is a CMC-subsemiring: its complement
  // {a, b} is multiplicatively closed since a*b = a
  auto zo = sub(m4, {0, 2});
  CHECK(zo.cls == SubsetClass::CmcSubsemiring);
  CHECK(zo.why_not_prime == "1 in subset (forbidden for primes)");
  CHECK(zo.proper);

  // a genuinely invalid subset: {0, a, b} read as a CMC candidate has 1
  // outside, and {a, 1} is neither (0 missing)
  auto inv = sub(m4, {1, 2});
  CHECK(inv.cls == SubsetClass::Invalid);
  CHECK(inv.why_not_prime == "0 not in subset");

  auto a = sub(m4, {0, 1, 2});  // {0, a, 1}
  CHECK(a.cls == SubsetClass::CmcSubsemiring);
  CHECK(a.proper);
}

TEST_CASE("all primes of M4 by exhaustive scan") {
  auto m4 = fixtures::m4();
  std::vector<std::vector<int>> primes;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    auto w = classify_subset(Subset::of_indices(m4, idx));
    if (w.cls == SubsetClass::Prime) primes.push_back(idx);
  }
  // {0}, {0,a}, {0,b}, {0,a,b} all satisfy the prime clauses
  CHECK(primes == std::vector<std::vector<int>>{{0}, {0, 1}, {0, 3}, {0, 1, 3}});
}

TEST_CASE("classify_subset on the rational-function field") {
  auto rf = std::make_shared<RatFuncField>();
  auto open = classify_subset(unit_ball(rf, false), kHalf);
  CHECK(open.cls == SubsetClass::PrimeSubset);
  CHECK(open.is_true);
  CHECK(open.sampled);

  auto closed = classify_subset(unit_ball(rf, true), kHalf);
  CHECK(closed.cls == SubsetClass::CmcSubset);
  CHECK(closed.is_true);
}

TEST_CASE("colon sets") {
  auto m4 = fixtures::m4();
  auto p = Subset::of_indices(m4, {0, 1});
  CHECK(colon_set(p, FinIdx{3}).indices() == std::vector<int>{0, 1});  // [p : b] = {0, a}
  CHECK(colon_set(p, FinIdx{0}).is_all());                             // [L : 0] = all
  auto a = Subset::of_indices(m4, {0, 1, 2});
  CHECK(colon_set(a, FinIdx{3}).indices() == std::vector<int>{0, 1});  // [A : b] = {0, a}

  auto rf = std::make_shared<RatFuncField>();
  auto ball = unit_ball(rf, true);
  Elem two = RatFunc::from_int(2);
  auto c = colon_set(ball, two);
  CHECK(c.pred().kind == SubsetPred::BallLeq);
  CHECK(c.pred().radius == RatFunc::from_rational(Rational(1, 2)));
}

TEST_CASE("quotient valuation by the prime {0,a} of M4") {
  auto m4 = fixtures::m4();
  auto v = quotient_valuation(sub(m4, {0, 1}));
  CHECK(v.kind == MapKind::MValuation);
  CHECK(v.target->size() == 2);
  CHECK(images(v) == std::vector<std::string>{"0", "0", "1", "1"});
  auto [a_v, p_v] = valuation_pair(v);
  CHECK(a_v.is_all());                                // x a in p for every x
  CHECK(p_v.indices() == std::vector<int>{0, 1});     // p_v = p
}

TEST_CASE("quotient valuation by the CMC-subsemiring {0,a,1} of M4") {
  auto m4 = fixtures::m4();
  auto v = quotient_valuation(sub(m4, {0, 1, 2}));
  CHECK(v.target->size() == 3);  // CHAIN3 shape
  CHECK(images(v) == std::vector<std::string>{"0", "0", "1", "b"});
  auto [a_v, p_v] = valuation_pair(v);
  CHECK(a_v.indices() == std::vector<int>{0, 1, 2});
  CHECK(p_v.indices() == std::vector<int>{0, 1});  // P(A)
}

TEST_CASE("improper CMC input is rejected") {
  auto b = fixtures::boolean();
  auto all = classify_subset(Subset::all(b));
  CHECK(all.cls == SubsetClass::CmcSubsemiring);
  CHECK(!all.proper);
  CHECK_THROWS_AS(quotient_valuation(all), PreconditionError);
}

TEST_CASE("quotient valuation on the field is the absolute-value map") {
  auto rf = std::make_shared<RatFuncField>();
  auto va = quotient_valuation(classify_subset(unit_ball(rf, true), kHalf));
  auto vp = quotient_valuation(classify_subset(unit_ball(rf, false), kHalf));
  CHECK(va.kind == MapKind::Mult01);
  Elem x = -(RatFunc::t() + RatFunc::from_int(2));
  CHECK(va.target->eq(va(x), Elem{(RatFunc::t() + RatFunc::from_int(2))}));
  // v_A = v_p as maps
  for (const Elem& e : rf->sample(60, kDefaultSeed)) CHECK(va.target->eq(va(e), vp(e)));
  auto [a_v, p_v] = valuation_pair(va);
  CHECK(a_v.pred().kind == SubsetPred::BallLeq);
  CHECK(p_v.pred().kind == SubsetPred::BallLt);
}

TEST_CASE("central prime and A(p)") {
  auto m4 = fixtures::m4();
  auto pa = central_prime(sub(m4, {0, 1, 2}));
  CHECK(pa.set.indices() == std::vector<int>{0, 1});  // P({0,a,1}) = {0,a}
  CHECK(pa.cls == SubsetClass::Prime);
  CHECK_THROWS_AS(central_prime(classify_subset(Subset::all(fixtures::boolean()))),
                  PreconditionError);

  auto ap = a_of_prime(sub(m4, {0, 1}));
  CHECK(ap.set.is_all());  // x a in {0,a} for every x: improper
  CHECK(!ap.proper);
  auto apb = a_of_prime(sub(fixtures::boolean(), {0}));
  CHECK(apb.set.is_all());

  auto rf = std::make_shared<RatFuncField>();
  auto p_rf = classify_subset(unit_ball(rf, false), kHalf);
  auto a_rf = a_of_prime(p_rf);
  CHECK(a_rf.set.pred().kind == SubsetPred::BallLeq);
  auto back = central_prime(classify_subset(unit_ball(rf, true), kHalf));
  CHECK(back.set.pred().kind == SubsetPred::BallLt);
}

TEST_CASE("envelope and core on the field with u = 1/2") {
  auto rf = std::make_shared<RatFuncField>();
  for (bool closed : {true, false}) {
    auto L = classify_subset(unit_ball(rf, closed), kHalf);
    auto ec = envelope_core(L, kHalf[0]);
    INFO(ec.checks.to_string());
    CHECK(ec.checks.ok());
    CHECK(!ec.fixpoint);
    CHECK(ec.b_proper);
    CHECK(ec.b.set.pred().kind == SubsetPred::OrdGeq);   // finite elements
    CHECK(ec.b.set.pred().min_ord == 0);
    CHECK(ec.q.set.pred().kind == SubsetPred::OrdGeq);   // infinitesimals + 0
    CHECK(ec.q.set.pred().min_ord == 1);
    CHECK(ec.b.cls == SubsetClass::CmcSubsemiring);
    CHECK(ec.q.cls == SubsetClass::Prime);
  }
}

TEST_CASE("exponent-1 envelope degenerates to a flagged fixpoint") {
  auto m4 = fixtures::m4();
  auto A = sub(m4, {0, 1, 2});
  auto ec = envelope_core(A, m4->one());
  CHECK(ec.fixpoint);
  CHECK(ec.b.set.same_as(A.set));
  CHECK(ec.q.set.same_as(A.set));
}

TEST_CASE("union convention: starting the envelope union at n=1 changes nothing") {
  auto rf = std::make_shared<RatFuncField>();
  auto L = classify_subset(unit_ball(rf, true), kHalf);
  auto ec = envelope_core(L, kHalf[0]);
  Elem u = kHalf[0];
  for (const Elem& x : rf->sample(120, kDefaultSeed)) {
    bool from0 = ec.b.set.contains(x);
    bool from1 = false;
    Elem up = u;
    for (int s = 1; s < 64 && !from1; ++s) {
      if (L.set.contains(rf->mul(up, x))) from1 = true;
      up = rf->mul(up, u);
    }
    CHECK(from0 == from1);
  }
}

TEST_CASE("dominance on M4: v_A dominates v_p but not conversely") {
  auto m4 = fixtures::m4();
  auto vA = quotient_valuation(sub(m4, {0, 1, 2}));
  auto vP = quotient_valuation(sub(m4, {0, 1}));

  auto d1 = dominates(vA, vP);
  CHECK(d1.holds);
  REQUIRE(d1.gamma.has_value());
  // gamma collapses {1, b} of the CHAIN3-shaped target onto 1
  const MultMap& g = *d1.gamma;
  CHECK(g.target->is_one(g(FinIdx{1})));
  CHECK(g.target->is_one(g(FinIdx{2})));

  auto d2 = dominates(vP, vA);
  CHECK(!d2.holds);
  CHECK(d2.witness == "(b, 1)");  // v_p(b) <= v_p(1) but v_A(b) > v_A(1)

  auto d3 = dominates(vA, vA);
  CHECK(d3.holds);
}

TEST_CASE("coarsenings") {
  // id on NIL3 coarsens to gamma_v0: NIL3 ->> booleans
  auto vid = identity_map(fixtures::nil3());
  auto w = v0_coarsening(vid);
  CHECK(w.target->size() == 2);
  CHECK(images(w) == std::vector<std::string>{"0", "0", "1"});

  auto wb = v0_coarsening(identity_map(fixtures::boolean()));
  CHECK(wb.target->size() == 2);

  // v_{M4,A} is already a V-valuation: its V-coarsening is itself up to iso
  auto m4 = fixtures::m4();
  auto vA = quotient_valuation(sub(m4, {0, 1, 2}));
  auto up = v_coarsening(vA);
  CHECK(up.target->size() == vA.target->size());
  auto rec = recognize(up, RecognizeKind::V);
  CHECK(rec.ok);

  // improper target rejected
  CHECK_THROWS_AS(v_coarsening(identity_map(fixtures::boolean())), PreconditionError);
}

TEST_CASE("recognize reconstructs quotient valuations") {
  auto m4 = fixtures::m4();
  auto vP = quotient_valuation(sub(m4, {0, 1}));
  auto r = recognize(vP, RecognizeKind::V0);
  CHECK(r.ok);
  CHECK(r.subset.indices() == std::vector<int>{0, 1});
  CHECK(r.iso.has_value());

  auto vA = quotient_valuation(sub(m4, {0, 1, 2}));
  auto rA = recognize(vA, RecognizeKind::V);
  CHECK(rA.ok);
  CHECK(rA.subset.indices() == std::vector<int>{0, 1, 2});

  auto rid = recognize(identity_map(fixtures::boolean()), RecognizeKind::V0);
  CHECK(rid.ok);
  CHECK(rid.subset.indices() == std::vector<int>{0});
}

TEST_CASE("recognize rejects the meet map on the product lattice") {
  auto b2 = fixtures::bool2();
  auto b = fixtures::boolean();
  // (x, y) -> x and y
  std::vector<Elem> tbl = {FinIdx{0}, FinIdx{0}, FinIdx{0}, FinIdx{1}};
  auto v = make_table_map(b2, b, tbl, MapKind::Mult01, "meet");
  auto r = recognize(v, RecognizeKind::V0);
  CHECK(!r.ok);
  CHECK(r.violated.find("additive rule fails at (01, 10)") != std::string::npos);
}

TEST_CASE("lemma: sx in L and ty in L force sy in L or tx in L") {
  auto m4 = fixtures::m4();
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    Subset L = Subset::of_indices(m4, idx);
    // applies whenever L and its complement are multiplicatively closed
    bool mc = true, cc = true;
    for (const Elem& x : all_elements(*m4))
      for (const Elem& y : all_elements(*m4)) {
        if (L.contains(x) && L.contains(y) && !L.contains(m4->mul(x, y))) mc = false;
        if (!L.contains(x) && !L.contains(y) && L.contains(m4->mul(x, y))) cc = false;
      }
    if (!mc || !cc) continue;
    for (const Elem& s : all_elements(*m4))
      for (const Elem& t : all_elements(*m4))
        for (const Elem& x : all_elements(*m4))
          for (const Elem& y : all_elements(*m4))
            if (L.contains(m4->mul(s, x)) && L.contains(m4->mul(t, y)))
              CHECK((L.contains(m4->mul(s, y)) || L.contains(m4->mul(t, x))));
  }
}

TEST_CASE("constructed quotient targets satisfy their separation lemmas") {
  auto m4 = fixtures::m4();
  auto vP = quotient_valuation(sub(m4, {0, 1}));
  CHECK(classify(as_bipotent(vP.target)).sep_v0);
  auto vA = quotient_valuation(sub(m4, {0, 1, 2}));
  CHECK(classify(as_bipotent(vA.target)).sep_v);
}

TEST_CASE("exponent bound on the field") {
  auto rf = std::make_shared<RatFuncField>();
  auto L = classify_subset(unit_ball(rf, true), kHalf);
  auto v = quotient_valuation(L);
  auto rep = check_exponent_bound(v, kHalf[0], 300);
  INFO(rep.to_string());
  CHECK(rep.ok());
}

TEST_CASE("surjective multiplicative maps are 0-1-multiplicative") {
  // random surjective multiplicative tables m4 -> booleans
  auto m4 = fixtures::m4();
  auto b = fixtures::boolean();
  int found = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Elem> tbl;
    for (int i = 0; i < 4; ++i) tbl.push_back(FinIdx{(mask >> i) & 1});
    auto v = make_table_map(m4, b, tbl, MapKind::Mult01, "cand");
    bool multiplicative = true, surj0 = false, surj1 = false;
    for (const Elem& x : all_elements(*m4)) {
      if (b->is_zero(v(x))) surj0 = true;
      if (b->is_one(v(x))) surj1 = true;
      for (const Elem& y : all_elements(*m4))
        if (!b->eq(v(m4->mul(x, y)), b->mul(v(x), v(y)))) multiplicative = false;
    }
    if (!multiplicative || !surj0 || !surj1) continue;
    ++found;
    CHECK(b->is_zero(v(m4->zero())));
    CHECK(b->is_one(v(m4->one())));
  }
  CHECK(found > 0);
}
