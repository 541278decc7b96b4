#include <doctest.h>

#include "tropval/fixtures.hpp"
#include "tropval/valuation.hpp"

using namespace tropval;

namespace {

std::vector<std::string> class_names(const MultMap& v) {
  std::vector<std::string> out;
  for (const Elem& e : all_elements(*v.source)) out.push_back(v.target->show(v(e)));
  return out;
}

}  // namespace

TEST_CASE("as_bipotent derives the chain order") {
  auto b = as_bipotent(fixtures::boolean());
  CHECK(b.chain.value() == std::vector<int>{0, 1});

  auto m4 = as_bipotent(fixtures::m4());
  // 0 < a < 1 < b read off the addition table
  CHECK(m4.chain.value() == std::vector<int>{0, 1, 2, 3});
  CHECK(m4.lt(FinIdx{1}, FinIdx{2}));

  auto rf = std::make_shared<RatFuncField>();
  CHECK_THROWS_AS(as_bipotent(rf), NonBipotentError);
  std::string wit;
  CHECK(!try_as_bipotent(rf, &wit));
  CHECK(!wit.empty());  // e.g. 1 + 1 = 2, not in {1, 1}
}

TEST_CASE("graded and absolute-value carriers are bipotent (sampled)") {
  CHECK(as_bipotent(std::make_shared<GradedCarrier>(false)).sampled);
  CHECK(as_bipotent(std::make_shared<GradedCarrier>(true)).sampled);
  CHECK(as_bipotent(std::make_shared<AbsValueCarrier>()).sampled);
}

TEST_CASE("nilradical") {
  auto nil3 = fixtures::nil3();
  auto q = nilradical(as_bipotent(nil3));
  CHECK(q.indices() == std::vector<int>{0, 1});  // {0, eps}

  CHECK(nilradical(as_bipotent(fixtures::boolean())).indices() == std::vector<int>{0});
  CHECK(nilradical(as_bipotent(fixtures::chain3())).indices() == std::vector<int>{0});
}

TEST_CASE("cancellative quotient of NIL3 collapses the nilradical") {
  auto q = cancellative_quotient(as_bipotent(fixtures::nil3()));
  CHECK(q.class_of == std::vector<int>{0, 0, 1});  // {0, eps}, {1}
  CHECK(q.quotient->size() == 2);
  CHECK(is_cancellative(q.quotient_view));
  CHECK(q.quotient->is_zero(q.pi(FinIdx{1})));  // eps maps to zero
}

TEST_CASE("cancellative quotient of CHAIN3 merges 1 and b") {
  auto q = cancellative_quotient(as_bipotent(fixtures::chain3()));
  // s = b gives 1*b = b*b
  CHECK(q.class_of == std::vector<int>{0, 1, 1});
  CHECK(q.quotient->size() == 2);
}

TEST_CASE("cancellative quotient of the booleans is the identity") {
  auto q = cancellative_quotient(as_bipotent(fixtures::boolean()));
  CHECK(q.quotient->size() == 2);
  CHECK(q.class_of == std::vector<int>{0, 1});
}

TEST_CASE("universal property of the minimal cancellative quotient") {
  auto bview = as_bipotent(fixtures::boolean());
  for (auto src : {fixtures::nil3(), fixtures::chain3()}) {
    auto q = cancellative_quotient(as_bipotent(src));
    auto rep = check_universal_property(q, bview);
    INFO(src->name(), "\n", rep.to_string());
    CHECK(rep.ok());
    CHECK(rep.find("qualifying homomorphisms found: 1") != nullptr);
  }
  // pi_C itself factors through the identity
  auto q = cancellative_quotient(as_bipotent(fixtures::nil3()));
  auto rep = check_universal_property(q, q.quotient_view);
  CHECK(rep.ok());
}

TEST_CASE("classification of the finite fixtures") {
  auto c3 = classify(as_bipotent(fixtures::chain3()));
  CHECK(c3.uic);
  CHECK(c3.sep_v);
  CHECK(!c3.sep_v0);  // the pair 1 < b admits no g with g < 1 <= b g
  CHECK(!c3.strict_uic);
  CHECK(c3.proper);
  CHECK(c3.theorem28_case == Theorem28Case::NotApplicable);  // not cancellative

  auto m4 = classify(as_bipotent(fixtures::m4()));
  CHECK(!m4.uic);
  CHECK(m4.uic_witness == "(0 < a)");
  CHECK(!m4.sep_v);
  CHECK(!m4.sep_v0);

  auto b = classify(as_bipotent(fixtures::boolean()));
  CHECK(b.uic);
  CHECK(b.sep_v0);
  CHECK(!b.proper);
  CHECK(b.cancellative);
  // hypothesis M_{<1} != {0} fails for the booleans
  CHECK(b.theorem28_case == Theorem28Case::NotApplicable);
}

TEST_CASE("classification of the graded carriers by closed form") {
  auto mz = classify(as_bipotent(std::make_shared<GradedCarrier>(false)));
  CHECK(mz.uic);
  CHECK(mz.sep_v);
  CHECK(mz.sep_v0);
  // integer grades: nothing fits strictly between u^j and u^(j+1), so the
  // encapsulation is never strict, and u^-1 is the biggest element below 1
  CHECK(!mz.strict_uic);
  CHECK(mz.theorem28_case == Theorem28Case::I);
  CHECK(mz.sampled);

  auto mn = classify(as_bipotent(std::make_shared<GradedCarrier>(true)));
  CHECK(!mn.uic);
  CHECK(!mn.sep_v);
  CHECK(!mn.sep_v0);
  CHECK(mn.theorem28_case == Theorem28Case::NotApplicable);

  auto abs = classify(as_bipotent(std::make_shared<AbsValueCarrier>()));
  CHECK(abs.strict_uic);  // dense value set
  CHECK(abs.theorem28_case == Theorem28Case::IV);
}

TEST_CASE("implication chart: strict UIC => SepV and SepV0; Sep* => UIC") {
  std::vector<CarrierPtr> pool = {fixtures::boolean(), fixtures::nil3(), fixtures::chain3(),
                                  fixtures::m4(), std::make_shared<GradedCarrier>(false),
                                  std::make_shared<GradedCarrier>(true),
                                  std::make_shared<AbsValueCarrier>()};
  for (const auto& c : pool) {
    auto k = classify(as_bipotent(c));
    INFO(c->name());
    if (k.strict_uic) {
      CHECK(k.sep_v);
      CHECK(k.sep_v0);
    }
    if (k.sep_v) CHECK(k.uic);
    if (k.sep_v0) CHECK(k.uic);
  }
}

TEST_CASE("gamma_v0 on the fixtures") {
  // NIL3: classes {0, eps}, {1}; target is the booleans
  auto g = gamma_v0(as_bipotent(fixtures::nil3()));
  CHECK(g.target->size() == 2);
  CHECK(class_names(g) == std::vector<std::string>{"0", "0", "1"});

  // booleans: identity shape
  auto gb = gamma_v0(as_bipotent(fixtures::boolean()));
  CHECK(gb.target->size() == 2);

  // M4: [p:1] = [p:b] = {0,a}, so 1 ~ b; target is the booleans
  auto gm = gamma_v0(as_bipotent(fixtures::m4()));
  CHECK(gm.target->size() == 2);
  CHECK(class_names(gm) == std::vector<std::string>{"0", "0", "1", "1"});
}

TEST_CASE("gamma_v on the fixtures") {
  // M4: colon sets of A_M = {0,a,1}: [A:a] = M4, [A:1] = {0,a,1}, [A:b] = {0,a}
  auto gm = gamma_v(as_bipotent(fixtures::m4()));
  CHECK(gm.target->size() == 3);
  CHECK(class_names(gm) == std::vector<std::string>{"0", "0", "1", "b"});

  // CHAIN3: identity-shaped
  auto gc = gamma_v(as_bipotent(fixtures::chain3()));
  CHECK(gc.target->size() == 3);

  // booleans: not proper
  CHECK_THROWS_AS(gamma_v(as_bipotent(fixtures::boolean())), PreconditionError);
}

TEST_CASE("every coarsening of a UIC m-valuation keeps UIC") {
  // id on CHAIN3 has UIC; its cancellative coarsening and gamma coarsenings too
  auto view = as_bipotent(fixtures::chain3());
  REQUIRE(classify(view).uic);
  auto q = cancellative_quotient(view);
  CHECK(classify(q.quotient_view).uic);
  auto g0 = gamma_v0(view);
  CHECK(classify(as_bipotent(g0.target)).uic);
}

TEST_CASE("UIC simplification of the cancellative relation (eq. 2.2)") {
  // on UIC carriers: x ~_C y iff xz = yz for some z != 0
  for (auto src : {fixtures::boolean(), fixtures::chain3()}) {
    auto view = as_bipotent(src);
    REQUIRE(classify(view).uic);
    auto q = cancellative_quotient(view);
    const Carrier& c = *src;
    for (const Elem& x : all_elements(c))
      for (const Elem& y : all_elements(c)) {
        bool rel = fin(q.pi(x)) == fin(q.pi(y));
        bool alt = false;
        for (const Elem& z : all_elements(c))
          if (!c.is_zero(z) && c.eq(c.mul(x, z), c.mul(y, z))) alt = true;
        INFO(src->name(), " ", c.show(x), " ", c.show(y));
        CHECK(rel == alt);
      }
  }
}

TEST_CASE("finite bipotent semirings with UIC have trivial nilradical") {
  for (auto src : {fixtures::boolean(), fixtures::chain3(), fixtures::m4(), fixtures::nil3()}) {
    auto view = as_bipotent(src);
    auto k = classify(view);
    if (k.uic) CHECK(nilradical(view).count() == 1);
  }
}
