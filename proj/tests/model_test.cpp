#include "doctest.h"
#include "fixtures.hpp"

#include "ctxdrt/model.hpp"
#include "ctxdrt/text.hpp"

using namespace ctxdrt;

TEST_CASE("a one-element countermodel to the possessive") {
  auto r = model_check(parse_drs("[x | hank(x), married(x)]"), parse_drs("[u | wife(u), of(u,x)]"), 3);
  CHECK(r.verdict == ModelVerdict::Refuted);
  REQUIRE(r.model);
  CHECK(r.model->domainSize == 1);
  CHECK(r.model->assignment.at("x") == 0);
  auto& atoms = r.model->trueAtoms;
  CHECK(std::find(atoms.begin(), atoms.end(), "hank(0)") != atoms.end());
  bool wifeOf = std::find(atoms.begin(), atoms.end(), "wife(0)") != atoms.end() &&
                std::find(atoms.begin(), atoms.end(), "of(0,0)") != atoms.end();
  CHECK_FALSE(wifeOf);
}

TEST_CASE("the empty DRS is satisfiable") {
  auto r = model_check(Drs{}, std::nullopt, 3);
  CHECK(r.verdict == ModelVerdict::Satisfiable);
  REQUIRE(r.model);
  CHECK(r.model->trueAtoms.empty());
}

TEST_CASE("a contradiction has no model at any size") {
  auto r = model_check(parse_drs("[ | p(a), not [ | p(a)]]"), std::nullopt, 3);
  CHECK(r.verdict == ModelVerdict::Refuted);
  CHECK_FALSE(r.model);
}

TEST_CASE("entailment inside the decidable class") {
  Drs premise = parse_drs("[x | p(x), [y | p(y)] => [ | q(y)]]");
  auto r = model_check(premise, parse_drs("[ | q(x)]"), 3);
  CHECK(r.verdict == ModelVerdict::Entailed);
  REQUIRE(r.sufficientDomain);
  CHECK(*r.sufficientDomain <= 3);
}

TEST_CASE("the marriage postulate") {
  Drs bg = ctxdrt::testing::marriage().postulates[0];
  Drs premise = merge(bg, parse_drs("[x | hank(x), married(x)]"));
  // A wife for everyone married puts an existential under a universal: no
  // domain bound, so no countermodel proves nothing.
  auto open = model_check(premise, parse_drs("[u | wife(u), of(u,x)]"), 2);
  CHECK(open.verdict == ModelVerdict::Unknown);
  CHECK_FALSE(open.sufficientDomain);
  CHECK(model_check(premise, parse_drs("[u | wife(u), of(x,u)]"), 2).verdict == ModelVerdict::Refuted);
}

TEST_CASE("outside the class and beyond the bound the answer is unknown") {
  // Every element has an r-successor: not Bernays-Schoenfinkel.
  Drs premise = parse_drs("[a | p(a), [x | p(x)] => [y | r(x,y), p(y)]]");
  auto r = model_check(premise, parse_drs("[ | q(a)]"), 2);
  CHECK(r.verdict == ModelVerdict::Refuted);
  auto e = model_check(premise, parse_drs("[y | r(a,y)]"), 2);
  CHECK(e.verdict == ModelVerdict::Unknown);
  CHECK_FALSE(e.sufficientDomain);
}

TEST_CASE("grounding ceiling") {
  // Unsatisfiable at every size and outside the bounded class, so the search
  // climbs to the largest domain.
  Drs premise = parse_drs(
      "[k | p(k), not [ | p(k)], [x | p(x)] => [y | r(x,y)], [a, b, c, d | r(a,b), r(b,c), r(c,d)] => [ | r(d,a)]]");
  CHECK_THROWS_AS(model_check(premise, std::nullopt, 8, 1000), ResourceLimit);
}

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(ModelVerdict::Entailed)) == "entailed");
  CHECK(std::string(verdict_name(ModelVerdict::Unknown)) == "unknown");
}
