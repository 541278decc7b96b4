#include <doctest.h>

#include "tropval/axioms.hpp"
#include "tropval/fixtures.hpp"
#include "tropval/format.hpp"

using namespace tropval;

TEST_CASE("rational function field arithmetic and order") {
  RatFunc t = RatFunc::t();
  RatFunc one = RatFunc::from_int(1);
  RatFunc half = RatFunc::from_rational(Rational(1, 2));

  CHECK(t * t.inverse() == one);
  CHECK((one + t) * (one - t) == one - t * t);
  CHECK(t.sign() == 1);
  CHECK((-t).sign() == -1);
  // t is infinitesimal: 0 < t < every positive rational
  CHECK(t < half);
  CHECK(RatFunc{} < t);
  // 1/t is larger than every rational
  CHECK(RatFunc::from_int(1000000) < t.inverse());
  CHECK(t.ord() == 1);
  CHECK(t.inverse().ord() == -1);
  CHECK((one + t).ord() == 0);
  // canonical form: monic denominator, gcd 1
  RatFunc r(Poly{{Rational(0), Rational(2)}}, Poly{{Rational(2), Rational(2)}});  // 2t/(2+2t)
  CHECK(r.den().lead() == 1);
  CHECK(r == RatFunc(Poly{{Rational(0), Rational(1)}}, Poly{{Rational(1), Rational(1)}}));
}

TEST_CASE("boolean semiring passes all axioms") {
  auto b = fixtures::boolean();
  auto rep = verify_semiring(*b);
  CHECK(rep.ok());
  CHECK(rep.exhaustive);
}

TEST_CASE("fixture tables pass all axioms") {
  for (auto s : {fixtures::nil3(), fixtures::chain3(), fixtures::m4(), fixtures::bool2()}) {
    auto rep = verify_semiring(*s);
    INFO(s->name());
    CHECK(rep.ok());
  }
}

TEST_CASE("injected a+a=1 table fails with witness (a,a,a)") {
  auto s = fixtures::bad_add3();
  auto rep = verify_semiring(*s);
  CHECK(!rep.ok());
  auto* line = rep.find("distributive");
  REQUIRE(line != nullptr);
  CHECK(!line->pass);
  CHECK(line->witness == "witness (a, a, a)");
}

TEST_CASE("graded and ratfunc carriers pass sampled axioms") {
  GradedCarrier mz(false), mn(true);
  RatFuncField rf;
  AbsValueCarrier abs;
  for (const Carrier* c : {static_cast<const Carrier*>(&mz), static_cast<const Carrier*>(&mn),
                           static_cast<const Carrier*>(&rf), static_cast<const Carrier*>(&abs)}) {
    auto rep = verify_semiring(*c, 1000);
    INFO(c->name());
    CHECK(rep.ok());
    CHECK(!rep.exhaustive);
  }
}

TEST_CASE("parse round-trips serialize bit-exactly on all fixtures") {
  for (auto s : {fixtures::boolean(), fixtures::nil3(), fixtures::chain3(), fixtures::m4(),
                 fixtures::bool2(), fixtures::bad_add3()}) {
    std::string doc = serialize(*s);
    auto back = std::static_pointer_cast<const FiniteSemiring>(parse_carrier(doc));
    CHECK(serialize(*back) == doc);
  }
}

TEST_CASE("parse errors carry position and kind") {
  CHECK_THROWS_AS(parse_carrier("semiring x\nelements a b\nzero q\none a\nadd\na a\na a\nmul\na a\na a\n"),
                  StructuralError);
  // unknown element in zero line
  try {
    parse_carrier("semiring x\nelements 0 1\nzero q\none 1\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n");
    CHECK(false);
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("unknown element 'q'") != std::string::npos);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  // duplicate element name
  CHECK_THROWS_AS(parse_carrier("semiring x\nelements 0 0\nzero 0\none 0\nadd\n0 0\n0 0\nmul\n0 0\n0 0\n"),
                  StructuralError);
  // single element = zero ring
  CHECK_THROWS_AS(parse_carrier("semiring x\nelements 0\nzero 0\none 0\nadd\n0\nmul\n0\n"),
                  StructuralError);
}

TEST_CASE("keyword carrier documents") {
  auto mz = parse_carrier("carrier maxplus_z\n");
  CHECK(mz->name() == "maxplus_z");
  CHECK(!mz->finite());
  auto rf = parse_carrier("# the ordered field\ncarrier ratfunc\n");
  CHECK(rf->name() == "ratfunc");
}

TEST_CASE("subset and partition parsing") {
  auto m4 = fixtures::m4();
  std::string name;
  auto members = parse_subset_line("subset p of m4 : 0 a\n", *m4, &name);
  CHECK(name == "p");
  CHECK(members == std::vector<int>{0, 1});
  CHECK_THROWS_AS(parse_subset_line("subset p of m4 : 0 z\n", *m4, nullptr), StructuralError);

  auto classes = parse_partition("partition of m4: {0 a} {1 b}\n", *m4);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<int>{0, 1});
  CHECK(classes[1] == std::vector<int>{2, 3});
  CHECK_THROWS_AS(parse_partition("partition of m4: {0 a} {1}\n", *m4), StructuralError);
}

TEST_CASE("deterministic samplers") {
  RatFuncField rf;
  auto s1 = rf.sample(200, kDefaultSeed);
  auto s2 = rf.sample(200, kDefaultSeed);
  REQUIRE(s1.size() == s2.size());
  for (std::size_t i = 0; i < s1.size(); ++i) CHECK(rf.eq(s1[i], s2[i]));
  GradedCarrier mz(false);
  auto g = mz.sample(7, kDefaultSeed);
  CHECK(g.size() == 7);
}
