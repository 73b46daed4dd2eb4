#include "doctest.h"
#include "fixtures.hpp"

#include "ctxdrt/check.hpp"
#include "ctxdrt/text.hpp"

using namespace ctxdrt;
using namespace ctxdrt::testing;

namespace {

Verdict check(const std::string& premise, const std::string& conclusion) {
  Drs p = parse_drs(premise);
  Drs c = parse_drs(conclusion);
  InferenceTask info{TaskKind::Informativity, p, c, "test", {}};
  InferenceTask cons{TaskKind::Consistency, merge(p, c), Drs{}, "test", {}};
  return check_reading({info, cons});
}

}  // namespace

TEST_CASE("readings of the hank example under the marriage postulate") {
  Drs k = hank();
  BackgroundTheory bg = marriage();
  auto rs = enumerate_readings(k, *parse_path("2:cons.1:alpha"));
  REQUIRE(rs.size() == 5);
  for (const auto& r : rs) {
    Verdict v = check_reading(build_tasks(r, k, bg));
    bool toPossessor = r.resolution.to_string() == "v->x";
    CAPTURE(r.id());
    CHECK(v.informative == (toPossessor ? CheckStatus::Fail : CheckStatus::Pass));
    CHECK(v.consistent == CheckStatus::Pass);
    CHECK(v.admissible() == !toPossessor);
  }
}

TEST_CASE("an empty conclusion is never informative") {
  Verdict v = check("[x | p(x)]", "[ | ]");
  CHECK(v.informative == CheckStatus::Fail);
  CHECK(v.informativeBy == "tableau");
}

TEST_CASE("accommodating a contradiction is inconsistent") {
  Verdict v = check("[x | q(x), not [ | p(x)]]", "[ | p(x)]");
  CHECK(v.informative == CheckStatus::Pass);
  CHECK(v.consistent == CheckStatus::Fail);
  CHECK_FALSE(v.admissible());
}

TEST_CASE("verdict helpers") {
  Verdict v;
  CHECK(v.admissible());
  CHECK_FALSE(v.certain());
  v.informative = v.consistent = CheckStatus::Pass;
  CHECK(v.certain());
  CHECK(std::string(check_name(CheckStatus::Unknown)) == "unknown");
}

TEST_CASE("projection resolves where it can") {
  auto out = project(every_husband(), {});
  REQUIRE(out.size() == 1);
  CHECK_FALSE(contains_alpha(out[0].result));
  REQUIRE(out[0].trail.size() == 1);
  REQUIRE(out[0].trail[0].resolution);
  CHECK(out[0].trail[0].resolution->to_string() == "u->y, v->x");
  CHECK_FALSE(out[0].trail[0].reading);
}

TEST_CASE("projection accommodates admissibly otherwise") {
  auto out = project(every_man(), {});
  REQUIRE(out.size() == 2);
  CHECK(out[0].trail[0].reading->site == SiteKind::Intermediate);
  CHECK(out[1].trail[0].reading->site == SiteKind::Local);
  for (const auto& r : out) {
    CHECK(r.trail[0].reading->resolution.to_string() == "v->x");
    CHECK(r.trail[0].verdict->certain());
  }
}

TEST_CASE("two readings of the hank example survive") {
  auto out = project(hank(), marriage());
  REQUIRE(out.size() == 2);
  CHECK(out[0].trail[0].reading->site == SiteKind::Intermediate);
  CHECK(out[1].trail[0].reading->site == SiteKind::Local);
  CHECK(out[0].trail[0].reading->resolution.to_string() == out[1].trail[0].reading->resolution.to_string());
}

TEST_CASE("projection errors") {
  Drs impure = parse_drs("[x | p(x)]");
  impure.conditions.push_back(neg(parse_drs("[x | q(x)]")));
  CHECK_THROWS_AS(project(impure, {}), ImpureInput);

  // The only reading contradicts the context.
  CHECK_THROWS_AS(project(parse_drs("[ | not [x | p(x)], alpha:[u | p(u)]]"), {}), NoAdmissibleReading);
  // A bare anaphor with nothing to bind to.
  CHECK_THROWS_AS(project(parse_drs("[ | p(v), alpha:[v | ]]"), {}), NoAdmissibleReading);
}

TEST_CASE("an alpha-free input is returned unchanged") {
  Drs k = parse_drs("[x | p(x)]");
  auto out = project(k, {});
  REQUIRE(out.size() == 1);
  CHECK(out[0].result == k);
  CHECK(out[0].trail.empty());
}
