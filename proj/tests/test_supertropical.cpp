#include <doctest.h>

#include "tropval/fixtures.hpp"
#include "tropval/supertropical.hpp"

using namespace tropval;

namespace {

MultMap chain3_to_bool(const FiniteSemiringPtr& c3, const FiniteSemiringPtr& b) {
  // 0 -> 0, 1 -> 1, b -> 1: the cancellative projection of CHAIN3
  return make_table_map(c3, b, {FinIdx{0}, FinIdx{1}, FinIdx{1}}, MapKind::Homomorphism, "pi");
}

/// U4 = OSTR({1,b}, {1}, v == 1) with chain 0 < t1 < tb < g1.
OstrBuild make_u4() {
  auto c3 = fixtures::chain3();
  auto b = fixtures::boolean();
  return build_ostr(as_bipotent(c3), as_bipotent(b), chain3_to_bool(c3, b));
}

/// The three-element ordered supertropical {0, t1, g1}.
OstrBuild make_u3() {
  auto b = fixtures::boolean();
  return build_ostr(as_bipotent(b), as_bipotent(b), identity_map(b));
}

}  // namespace

TEST_CASE("every bipotent semiring is supertropical with no tangibles") {
  for (auto c : {fixtures::boolean(), fixtures::chain3(), fixtures::m4(), fixtures::nil3()}) {
    auto v = verify_supertropical(c);
    INFO(c->name(), "\n", v.report.to_string());
    REQUIRE(v.view.has_value());
    for (const Elem& x : all_elements(*c)) CHECK(v.view->is_ghost_or_zero(x));
  }
}

TEST_CASE("the product lattice is not supertropical") {
  auto v = verify_supertropical(fixtures::bool2());
  CHECK(!v.view.has_value());
  auto* line = v.report.find("ghost ideal eU is bipotent");
  REQUIRE(line != nullptr);
  CHECK(!line->pass);
  CHECK(!line->witness.empty());
}

TEST_CASE("build_ostr materializes U4 with the expected chain") {
  auto u4 = make_u4();
  const auto& c = *u4.u.st.u;
  REQUIRE(c.size() == 4);
  auto fs = std::dynamic_pointer_cast<const FiniteSemiring>(u4.u.st.u);
  CHECK(fs->element_names() == std::vector<std::string>{"0", "t1", "tb", "g1"});
  // chain 0 < t1 < tb < g1
  CHECK(u4.u.rank_of.value() == std::vector<int>{0, 1, 2, 3});
  // e = 1 + 1 is the ghost unit
  CHECK(c.eq(u4.u.st.e, FinIdx{3}));
  CHECK(u4.u.st.is_tangible(FinIdx{1}));
  CHECK(u4.u.st.is_tangible(FinIdx{2}));
  CHECK(u4.u.st.is_ghost_or_zero(FinIdx{3}));
}

TEST_CASE("alternative and broken orders on U4") {
  auto u4 = make_u4();
  // 0 < tb < t1 < g1 is the order of OSTR over {b < 1}: a second valid total
  // ordering of the same supertropical semiring
  auto swapped = verify_total_order(u4.u.st, std::vector<int>{0, 2, 1, 3});
  INFO(swapped.report.to_string());
  CHECK(swapped.view.has_value());

  // putting the ghost below a tangible breaks x <= nu(x)
  auto bad = verify_total_order(u4.u.st, std::vector<int>{0, 1, 3, 2});
  CHECK(!bad.view.has_value());
  auto* gh5 = bad.report.find("Gh5: x <= nu(x)");
  REQUIRE(gh5 != nullptr);
  CHECK(!gh5->pass);

  // zero must be least
  auto bad0 = verify_total_order(u4.u.st, std::vector<int>{1, 0, 2, 3});
  CHECK(!bad0.view.has_value());
}

TEST_CASE("the booleans with 0 < 1 pass the total-order checks") {
  auto b = fixtures::boolean();
  auto st = verify_supertropical(b);
  auto ord = verify_total_order(*st.view, std::vector<int>{0, 1});
  INFO(ord.report.to_string());
  CHECK(ord.view.has_value());
}

TEST_CASE("build_ostr over graded carriers gives the symbolic domain") {
  auto mz = std::make_shared<GradedCarrier>(false);
  auto d = build_ostr(as_bipotent(mz), as_bipotent(mz), identity_map(mz));
  CHECK(!d.u.st.u->finite());
  CHECK(d.u.sampled);
  const Carrier& c = *d.u.st.u;
  Elem t0 = STElem{STElem::Tangible, GradeElem{false, 0}};
  Elem g0 = STElem{STElem::Ghost, GradeElem{false, 0}};
  CHECK(c.eq(c.one(), t0));
  CHECK(c.eq(d.u.st.e, g0));
  CHECK(d.u.lt(t0, g0));
  // each ghost fiber holds exactly one tangible, so the minimal order is total
  Elem t5 = STElem{STElem::Tangible, GradeElem{false, 5}};
  CHECK(c.eq(c.mul(d.u.st.e, t5), STElem{STElem::Ghost, GradeElem{false, 5}}));
}

TEST_CASE("build_ostr requires a cancellative ghost monoid") {
  auto c3 = fixtures::chain3();
  CHECK_THROWS_WITH_AS(build_ostr(as_bipotent(c3), as_bipotent(c3), identity_map(c3)),
                       doctest::Contains("use a graded carrier"), PreconditionError);
}

TEST_CASE("tangible cover of v_A is the ultrametric phi_A into U4") {
  auto m4 = fixtures::m4();
  auto vA = quotient_valuation(classify_subset(Subset::of_indices(m4, {0, 1, 2})));
  auto cq = cancellative_quotient(as_bipotent(vA.target));
  auto sv = tangible_cover(vA, cq.pi);

  const Carrier& u = *sv.build.u.st.u;
  REQUIRE(u.size() == 4);
  // 0, a -> 0; 1 -> t1; b -> tb
  CHECK(u.is_zero(sv.phi(FinIdx{0})));
  CHECK(u.is_zero(sv.phi(FinIdx{1})));
  CHECK(u.show(sv.phi(FinIdx{2})) == "t1");
  CHECK(u.show(sv.phi(FinIdx{3})) == "tb");

  auto cls = classify_supervaluation(sv);
  CHECK(cls.tangible);
  CHECK(cls.ultrametric);
  REQUIRE(cls.artinian_constants.size() == 1);  // the only unit of U4
  CHECK(u.is_one(cls.artinian_constants[0]));
}

TEST_CASE("tangible cover of v_p lands in the three-element carrier") {
  auto m4 = fixtures::m4();
  auto vP = quotient_valuation(classify_subset(Subset::of_indices(m4, {0, 1})));
  auto sv = tangible_cover(vP, identity_map(vP.target));
  const Carrier& u = *sv.build.u.st.u;
  REQUIRE(u.size() == 3);
  CHECK(u.is_zero(sv.phi(FinIdx{1})));
  CHECK(u.show(sv.phi(FinIdx{2})) == "t1");
  CHECK(u.show(sv.phi(FinIdx{3})) == "t1");
}

TEST_CASE("minimal tangible cover of the t-adic valuation") {
  auto rf = std::make_shared<RatFuncField>();
  Subset b_set = Subset::of_pred(rf, SubsetPred{SubsetPred::OrdGeq, {}, 0, std::nullopt});
  auto vB = quotient_valuation(classify_subset(b_set));
  auto sv = tangible_cover(vB, identity_map(vB.target));
  const Carrier& u = *sv.build.u.st.u;
  Elem x = RatFunc::t().inverse();  // ord -1, grade 1
  CHECK(u.show(sv.phi(x)) == "t:u^1");
  CHECK(u.show(u.mul(sv.build.u.st.e, sv.phi(x))) == "g:u^1");
  auto cls = classify_supervaluation(sv);
  CHECK(cls.tangible);
  CHECK(cls.ultrametric);
}

TEST_CASE("phi_{A,1/2} on the field: tangible absolute values over grade ghosts") {
  auto rf = std::make_shared<RatFuncField>();
  Elem half = RatFunc::from_rational(Rational(1, 2));
  auto A = classify_subset(
      Subset::of_pred(rf, SubsetPred{SubsetPred::BallLeq, RatFunc::from_int(1), 0, std::nullopt}),
      {half});
  auto sv = build_phi_L(A, half, EnvelopeSide::Q);
  const Carrier& u = *sv.build.u.st.u;
  Elem x = -(RatFunc::from_int(2) * RatFunc::t());
  CHECK(u.show(sv.phi(x)) == "t:2*t");
  CHECK(u.show(u.mul(sv.build.u.st.e, sv.phi(x))) == "g:u^-1");

  auto cls = classify_supervaluation(sv);
  CHECK(cls.tangible);
  CHECK(!cls.ultrametric);  // |1 + 1| = 2 > max(|1|, |1|)
  REQUIRE(cls.least_constant.has_value());
  // artinian with constant phi(u^-1) = phi(2), and the sampled bound agrees
  CHECK(u.eq(*cls.least_constant, sv.phi(Elem{RatFunc::from_int(2)})));
  std::string wit;
  CHECK(artinian_with_constant(sv, sv.phi(Elem{RatFunc::from_int(2)}), &wit));

  // the envelope-side supervaluation exists since B != R here
  auto psi = build_phi_L(A, half, EnvelopeSide::B);
  CHECK(psi.phi.label.find("psi_") == 0);
}

TEST_CASE("build_phi_L rejects subsets with exponent 1") {
  auto m4 = fixtures::m4();
  auto p = classify_subset(Subset::of_indices(m4, {0, 1}));
  CHECK_THROWS_WITH_AS(build_phi_L(p, m4->one(), EnvelopeSide::Q),
                       doctest::Contains("L not true"), PreconditionError);
}

TEST_CASE("prop 4.22 on the degree supervaluation") {
  auto rf = std::make_shared<RatFuncField>();
  Subset b_set = Subset::of_pred(rf, SubsetPred{SubsetPred::OrdGeq, {}, 0, std::nullopt});
  auto vB = quotient_valuation(classify_subset(b_set));
  auto sv = tangible_cover(vB, identity_map(vB.target));

  Elem c = STElem{STElem::Tangible, GradeElem{false, 1}};
  Elem t = RatFunc::t();
  auto res = check_prop_4_22(sv, c, t);
  REQUIRE(res.hypotheses_met);
  INFO(res.conclusions.to_string());
  CHECK(res.conclusions.ok());

  // c = 1 is not above e
  Elem one_u = STElem{STElem::Tangible, GradeElem{false, 0}};
  auto bad = check_prop_4_22(sv, one_u, t);
  CHECK(!bad.hypotheses_met);
  CHECK(bad.hypothesis_failure == "c is not above e");
}

TEST_CASE("prop 4.22 hypothesis fails on U4: no unit above e") {
  auto m4 = fixtures::m4();
  auto vA = quotient_valuation(classify_subset(Subset::of_indices(m4, {0, 1, 2})));
  auto cq = cancellative_quotient(as_bipotent(vA.target));
  auto sv = tangible_cover(vA, cq.pi);
  // the only unit of U4 is t1 = 1 < e
  auto res = check_prop_4_22(sv, sv.build.u.st.u->one(), m4->one());
  CHECK(!res.hypotheses_met);
}

TEST_CASE("transmission flags on U4 maps") {
  auto u4 = make_u4();
  auto u3 = make_u3();
  const auto& cu = u4.u.st.u;
  const auto& cv = u3.u.st.u;

  // 0 -> 0, t1 -> t1, tb -> t1, g1 -> g1: monotone multiplicative, hence a
  // homomorphism by the three-condition theorem
  auto alpha = make_table_map(cu, cv, {FinIdx{0}, FinIdx{1}, FinIdx{1}, FinIdx{2}},
                              MapKind::Mult01, "collapse");
  auto flags = check_transmission(alpha, u4.u, u3.u);
  CHECK(flags.multiplicative);
  CHECK(flags.monotone);
  CHECK(flags.transmission);
  CHECK(flags.homomorphism);
  CHECK(flags.thm53.ok());

  auto id = identity_map(cu);
  auto idf = check_transmission(id, u4.u, u4.u);
  CHECK(idf.transmission);
  CHECK(idf.homomorphism);
  CHECK(idf.monotone);

  // swapping t1 and tb is not even multiplicative
  auto swap = make_table_map(cu, cu, {FinIdx{0}, FinIdx{2}, FinIdx{1}, FinIdx{3}},
                             MapKind::Mult01, "swap");
  auto sw = check_transmission(swap, u4.u, u4.u);
  CHECK(!sw.monotone);
  CHECK(!sw.multiplicative);
  CHECK(!sw.transmission);
}

TEST_CASE("phi_A totally dominates phi_p on M4 (central-prime pattern)") {
  auto m4 = fixtures::m4();
  auto vA = quotient_valuation(classify_subset(Subset::of_indices(m4, {0, 1, 2})));
  auto cqA = cancellative_quotient(as_bipotent(vA.target));
  auto phiA = tangible_cover(vA, cqA.pi);

  auto vP = quotient_valuation(classify_subset(Subset::of_indices(m4, {0, 1})));
  auto phiP = tangible_cover(vP, identity_map(vP.target));

  auto dom = dominance(phiA, phiP, DominanceMode::Total);
  CHECK(dom.holds);
  REQUIRE(dom.alpha.has_value());
  REQUIRE(dom.alpha_flags.has_value());
  CHECK(dom.alpha_flags->transmission);
  CHECK(dom.alpha_flags->monotone);
  CHECK(dom.alpha_flags->homomorphism);

  auto self = dominance(phiA, phiA, DominanceMode::Total);
  CHECK(self.holds);
  REQUIRE(self.alpha.has_value());
  for (const Elem& x : all_elements(*phiA.build.u.st.u))
    CHECK(phiA.build.u.st.u->eq((*self.alpha)(x), x));
}

TEST_CASE("the artinian supervaluation totally dominates the core ultrametric one") {
  auto rf = std::make_shared<RatFuncField>();
  Elem half = RatFunc::from_rational(Rational(1, 2));
  auto A = classify_subset(
      Subset::of_pred(rf, SubsetPred{SubsetPred::BallLeq, RatFunc::from_int(1), 0, std::nullopt}),
      {half});
  auto phi = build_phi_L(A, half, EnvelopeSide::Q);

  auto ec = envelope_core(A, half);
  auto vQ = quotient_valuation(ec.q);
  auto phiQ = tangible_cover(vQ, identity_map(vQ.target));

  auto dom = dominance(phi, phiQ, DominanceMode::Total, 800);
  CHECK(dom.holds);
  CHECK(dom.sampled);
  REQUIRE(dom.alpha.has_value());
  CHECK(dom.alpha_flags->monotone);

  // remark 5.7: the dominated side inherits the artinian constant alpha(c)
  Elem c = phi.phi(Elem{RatFunc::from_int(2)});
  std::string wit;
  REQUIRE(artinian_with_constant(phi, c, &wit));
  Elem ac = (*dom.alpha)(c);
  CHECK(artinian_with_constant(phiQ, ac, &wit));
}

TEST_CASE("example 5.9 with g = t") {
  auto rf = std::make_shared<RatFuncField>();
  Elem half = RatFunc::from_rational(Rational(1, 2));
  Elem t = RatFunc::t();
  auto A = classify_subset(
      Subset::of_pred(rf, SubsetPred{SubsetPred::BallLeq, RatFunc::from_int(1), 0, std::nullopt}),
      {half});
  auto rep = check_example_5_9(A, half, t, 250);
  INFO(rep.to_string());
  CHECK(rep.ok());
  CHECK(rep.find("psi side skipped: B_f(L) = R") != nullptr);
  // the extracted transmission here is a genuine non-monotone case: the
  // collapsed ghost part of U(R,A,{0}) loses the strict ghost inequalities

  // g = 1: everything degenerates to reflexivity
  auto rep1 = check_example_5_9(A, half, Elem{RatFunc::from_int(1)}, 250);
  CHECK(rep1.ok());

  // g outside L is a hypothesis failure
  auto rep2 = check_example_5_9(A, half, Elem{RatFunc::t().inverse()}, 250);
  CHECK(!rep2.ok());
  CHECK(rep2.lines.front().witness == "g lies outside L");
}
