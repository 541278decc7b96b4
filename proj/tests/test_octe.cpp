#include <doctest.h>

#include "tropval/fixtures.hpp"
#include "tropval/octe.hpp"

using namespace tropval;

namespace {

/// U4 = {0, t1, tb, g1} as a verified ordered supertropical carrier.
OstrBuild make_u4() {
  auto c3 = fixtures::chain3();
  auto b = fixtures::boolean();
  auto pi = make_table_map(c3, b, {FinIdx{0}, FinIdx{1}, FinIdx{1}}, MapKind::Homomorphism, "pi");
  return build_ostr(as_bipotent(c3), as_bipotent(b), pi);
}

/// A bipotent fixture viewed as a ghost-only ordered supertropical carrier.
OrderedSupertropical ghost_only(const FiniteSemiringPtr& c) {
  auto st = verify_supertropical(c);
  REQUIRE(st.view.has_value());
  auto bip = as_bipotent(c);
  auto ord = verify_total_order(*st.view, bip.rank_of);
  REQUIRE(ord.view.has_value());
  return *ord.view;
}

}  // namespace

TEST_CASE("diagonal and merged partitions on U4") {
  auto u4 = make_u4();
  auto diag = verify_octe(u4.u, {{0}, {1}, {2}, {3}});
  REQUIRE(diag.rel.has_value());
  CHECK(!diag.rel->degenerate);
  auto q = octe_quotient(*diag.rel);
  CHECK(q.u.st.u->size() == 4);

  // {0} {t1} {tb g1}: convex (adjacent in the chain) and multiplicative
  auto merged = verify_octe(u4.u, {{0}, {1}, {2, 3}});
  REQUIRE(merged.rel.has_value());
  auto qm = octe_quotient(*merged.rel);
  REQUIRE(qm.u.st.u->size() == 3);
  // quotient: 0 < [t1] tangible < [tb] ghost
  const Carrier& c = *qm.u.st.u;
  auto fs = std::dynamic_pointer_cast<const FiniteSemiring>(qm.u.st.u);
  CHECK(fs->element_names() == std::vector<std::string>{"0", "t1", "tb"});
  CHECK(qm.u.st.is_tangible(FinIdx{1}));
  CHECK(qm.u.st.is_ghost_or_zero(FinIdx{2}));
  CHECK(c.eq(qm.u.st.e, FinIdx{2}));
  CHECK(qm.pi_flags.transmission);
  CHECK(qm.pi_flags.homomorphism);
  CHECK(qm.pi_flags.monotone);

  // {0 g1} {t1} {tb} skips the middle of the chain
  auto bad = verify_octe(u4.u, {{0, 3}, {1}, {2}});
  CHECK(!bad.rel.has_value());
  auto* line = bad.report.find("classes are convex");
  REQUIRE(line != nullptr);
  CHECK(!line->pass);
}

TEST_CASE("ideal relation on ghost-only fixtures") {
  // NIL3: the ideal {0, eps} collapses everything below eps
  auto nil3 = ghost_only(fixtures::nil3());
  auto rel = ideal_relation(nil3, Subset::of_indices(fixtures::nil3(), {0, 1}));
  CHECK(rel.class_of.value() == std::vector<int>{0, 0, 1});
  CHECK(rel.degenerate);  // one nonzero class
  auto q = octe_quotient(rel);
  CHECK(q.u.st.u->size() == 2);

  // M4: the ideal {0, a} yields a three-class nondegenerate quotient
  auto m4 = ghost_only(fixtures::m4());
  auto relm = ideal_relation(m4, Subset::of_indices(fixtures::m4(), {0, 1}));
  CHECK(relm.class_of.value() == std::vector<int>{0, 0, 1, 2});
  CHECK(!relm.degenerate);
  auto qm = octe_quotient(relm);
  CHECK(qm.u.st.u->size() == 3);
  CHECK(qm.pi_flags.homomorphism);

  // membership in the collapsed class is downward closed in ghost value
  const Carrier& c = *m4.st.u;
  for (const Elem& x : all_elements(c))
    for (const Elem& y : all_elements(c))
      if (relm.same(x, c.zero()) && m4.leq(m4.st.nu(y), m4.st.nu(x)))
        CHECK(relm.same(y, c.zero()));
}

TEST_CASE("ideal relation edge cases on U4") {
  auto u4 = make_u4();
  auto diag = ideal_relation(u4.u, Subset::of_indices(u4.u.st.u, {0}));
  CHECK(diag.class_of.value() == std::vector<int>{0, 1, 2, 3});
  CHECK(!diag.degenerate);

  // the whole carrier collapses to a single class; flagged, not quotientable
  auto total = ideal_relation(u4.u, Subset::all(u4.u.st.u));
  CHECK(total.degenerate);
  CHECK(total.class_count == 1);
  CHECK_THROWS_AS(octe_quotient(total), PreconditionError);

  // not an ideal: {0, t1} fails absorption (t1 * tb = tb outside)
  CHECK_THROWS_WITH_AS(ideal_relation(u4.u, Subset::of_indices(u4.u.st.u, {0, 1})),
                       doctest::Contains("not an ideal"), PreconditionError);
}

TEST_CASE("the spec's graded example set is not an ideal") {
  auto mz = std::make_shared<GradedCarrier>(false);
  auto d = build_ostr(as_bipotent(mz), as_bipotent(mz), identity_map(mz));
  // {x : ex <= u^0} u {0} is not absorbing: t(0) * t(4) = t(4) escapes
  Subset a0 = Subset::of_pred(d.u.st.u,
                              SubsetPred{SubsetPred::GhostAtMost, {}, 0, GradeElem{false, 0}});
  CHECK_THROWS_WITH_AS(ideal_relation(d.u, a0), doctest::Contains("not an ideal"),
                       PreconditionError);
}

TEST_CASE("fiber relation on U4") {
  auto u4 = make_u4();

  // A = {0, tb, g1}: the fiber over g1 is t1 < tb < g1 and meets A in an
  // upper set, so the relation exists and merges {tb, g1}
  auto r1 = fiber_relation(u4.u, Subset::of_indices(u4.u.st.u, {0, 2, 3}), std::nullopt);
  REQUIRE(r1.rel.has_value());
  CHECK(r1.rel->class_of.value() == std::vector<int>{0, 1, 2, 2});
  auto q1 = octe_quotient(*r1.rel);
  CHECK(q1.u.st.u->size() == 3);

  // A = {0, t1, g1} skips tb inside the fiber: condition (2) fails
  auto r2 = fiber_relation(u4.u, Subset::of_indices(u4.u.st.u, {0, 1, 3}), std::nullopt);
  CHECK(!r2.rel.has_value());
  CHECK(r2.not_octe_witness ==
        "condition (2) fails: t1 < tb in the fiber over g1 but only the lower one lies in A");

  // A = U merges each fiber into its ghost
  auto r3 = fiber_relation(u4.u, Subset::all(u4.u.st.u), std::nullopt);
  REQUIRE(r3.rel.has_value());
  CHECK(r3.rel->class_of.value() == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("fiber relation with a nontrivial ghost collapse") {
  // ghost-only CHAIN3 with Phi collapsing {1, b}: fibers are singletons, and
  // the fiber over b is collapsed from below, so it must lie inside A = U
  auto c3 = ghost_only(fixtures::chain3());
  auto res = fiber_relation(c3, Subset::all(fixtures::chain3()),
                            std::vector<std::vector<int>>{{0}, {1, 2}});
  REQUIRE(res.rel.has_value());
  CHECK(res.rel->class_of.value() == std::vector<int>{0, 1, 1});
  auto q = octe_quotient(*res.rel);
  CHECK(q.u.st.u->size() == 2);
}

TEST_CASE("fiber relation on the symbolic domain merges fibers into ghosts") {
  auto mz = std::make_shared<GradedCarrier>(false);
  auto d = build_ostr(as_bipotent(mz), as_bipotent(mz), identity_map(mz));
  auto res = fiber_relation(d.u, Subset::all(d.u.st.u), std::nullopt);
  REQUIRE(res.rel.has_value());
  CHECK(!res.rel->degenerate);
  auto q = octe_quotient(*res.rel);
  CHECK(q.pi_flags.transmission);
  CHECK(q.pi_flags.monotone);
  CHECK(q.pi_flags.homomorphism);
  // the quotient is ghost-only
  const Carrier& c = *q.u.st.u;
  Elem t3 = STElem{STElem::Tangible, GradeElem{false, 3}};
  CHECK(q.u.st.is_ghost_or_zero(q.pi(t3)));
}

TEST_CASE("kernel of a surjective monotone transmission is OCTE") {
  auto u4 = make_u4();
  auto c3b = build_ostr(as_bipotent(fixtures::boolean()), as_bipotent(fixtures::boolean()),
                        identity_map(fixtures::boolean()));
  // collapse tb to t1
  auto alpha = make_table_map(u4.u.st.u, c3b.u.st.u, {FinIdx{0}, FinIdx{1}, FinIdx{1}, FinIdx{2}},
                              MapKind::Mult01, "collapse");
  auto flags = check_transmission(alpha, u4.u, c3b.u);
  REQUIRE(flags.transmission);
  REQUIRE(flags.monotone);
  // kernel partition
  std::vector<std::vector<int>> kernel{{0}, {1, 2}, {3}};
  auto ver = verify_octe(u4.u, kernel);
  REQUIRE(ver.rel.has_value());
  auto q = octe_quotient(*ver.rel);
  // induced rho: U/E -> V is an order isomorphism
  const Carrier& qc = *q.u.st.u;
  REQUIRE(qc.size() == c3b.u.st.u->size());
  for (const Elem& x : all_elements(qc))
    for (const Elem& y : all_elements(qc)) {
      Elem ax = alpha(q.pi.section(x));
      Elem ay = alpha(q.pi.section(y));
      CHECK(q.u.leq(x, y) == c3b.u.leq(ax, ay));
    }
}
