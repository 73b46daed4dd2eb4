#include "doctest.h"
#include "fixtures.hpp"

#include "ctxdrt/text.hpp"

using namespace ctxdrt;

TEST_CASE("the every-man example parses to its structure") {
  Drs k = parse_drs("[ | [x | man(x)] => [ | likes(x,u), alpha:[u | wife(u), of(u,v), alpha:[v | ]]]]");
  REQUIRE(k.conditions.size() == 1);
  const Imp& i = k.conditions[0].as<Imp>();
  CHECK(print_drs(*i.antecedent) == "[x | man(x)]");
  REQUIRE(i.consequent->conditions.size() == 2);
  const Alpha& a = i.consequent->conditions[1].as<Alpha>();
  CHECK(a.body->conditions.size() == 3);
  CHECK(is_simple_anaphor(a.body->conditions[2].as<Alpha>()));
  CHECK(k == ctxdrt::testing::every_man());
}

TEST_CASE("canonical printing") {
  CHECK(print_drs(parse_drs("[x,y|man(x),wife(y)]")) == "[x, y | man(x), wife(y)]");
  CHECK(print_drs(parse_drs("[ | ]")) == "[ | ]");
  CHECK(print_drs(parse_drs("[|]")) == "[ | ]");
  CHECK(parse_drs("[ | ]").empty());
  CHECK(print_drs(parse_drs("[ | [a|p(a)] or [b|q(b)], not [ | r(a,b)]]")) ==
        "[ | [a | p(a)] or [b | q(b)], not [ | r(a,b)]]");
}

TEST_CASE("comments and whitespace") {
  Drs k = parse_drs("# header\n[ x |\n  man(x) # trailing\n]\n");
  CHECK(print_drs(k) == "[x | man(x)]");
}

TEST_CASE("keywords are valid predicate names") {
  Drs k = parse_drs("[x | not(x), in(x), alpha(x), or(x,x)]");
  CHECK(print_drs(k) == "[x | not(x), in(x), alpha(x), or(x,x)]");
}

TEST_CASE("parse errors carry a span and expectations") {
  try {
    parse_drs("[x man(x)]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.span.start == 3);
    CHECK(std::find(e.expected.begin(), e.expected.end(), "'|'") != e.expected.end());
    CHECK(std::string(e.what()).find("line 1, column 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_drs("[x | man()]"), ParseError);
  CHECK_THROWS_AS(parse_drs("[x | man(x)"), ParseError);
  CHECK_THROWS_AS(parse_drs("[x | man(x)] extra"), ParseError);
  CHECK_THROWS_AS(parse_drs("[X | man(X)]"), ParseError);
}

TEST_CASE("describe_position") {
  CHECK(describe_position("ab\ncd", 4) == "line 2, column 2");
  CHECK(describe_position("", 0) == "line 1, column 1");
}

TEST_CASE("drs lists") {
  auto ks = parse_drs_list("[ | p(a)]\n# second\n[x | q(x)]");
  REQUIRE(ks.size() == 2);
  CHECK(print_drs(ks[1]) == "[x | q(x)]");
  CHECK(parse_drs_list("# nothing\n").empty());
}

TEST_CASE("context formulas") {
  LConFormula f = parse_lcon(ctxdrt::testing::kHankFormula);
  CHECK(print_lcon(f) == ctxdrt::testing::kHankFormula);
  REQUIRE(f.is<In>());
  CHECK(print_drs(f.as<In>().context) == "[x | hank(x), married(x)]");

  LConFormula g = parse_lcon("in([x|p(x)], [ |p(x)])");
  REQUIRE(g.is<In>());
  CHECK(g.as<In>().body->is<DrsLit>());
  CHECK(print_lcon(g) == "in([x | p(x)], [ | p(x)])");

  // & binds tighter than |
  LConFormula h = parse_lcon("[ | p(a)] | [ | q(a)] & [ | r(a,a)]");
  REQUIRE(h.is<LOr>());
  CHECK(h.as<LOr>().items[1].is<LAnd>());
  CHECK(print_lcon(parse_lcon("([ | p(a)] | [ | q(a)]) & [ | r(a,a)]")) == "([ | p(a)] | [ | q(a)]) & [ | r(a,a)]");
  CHECK_THROWS_AS(parse_lcon("in([ | ])"), ParseError);
}
