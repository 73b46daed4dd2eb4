#include "doctest.h"
#include "fixtures.hpp"

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using ctxdrt::testing::data_path;
using ctxdrt::testing::kHankFormula;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ctxdrt::cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse echoes canonical form") {
  auto r = run({"parse", data_path("every_man.drs")});
  CHECK(r.code == 0);
  CHECK(r.out == "[ | [x | man(x)] => [ | likes(x,u), alpha:[u | wife(u), of(u,v), alpha:[v | ]]]]\n");
}

TEST_CASE("parse errors point at the offending token") {
  auto r = run({"parse", data_path("bad.drs")});
  CHECK(r.code == ctxdrt::cli::kInputError);
  CHECK(r.err.find("line 1, column 4") != std::string::npos);
  CHECK(r.err.find("  [x man(x)]\n     ^") != std::string::npos);
}

TEST_CASE("usage and file errors") {
  CHECK(run({}).code == ctxdrt::cli::kInputError);
  CHECK(run({"frobnicate", "x"}).code == ctxdrt::cli::kInputError);
  CHECK(run({"parse", "/nonexistent/file.drs"}).code == ctxdrt::cli::kInputError);
  CHECK(run({"readings", data_path("hank.drs"), "--gamma", "0"}).code == ctxdrt::cli::kInputError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("resolve") {
  auto husband = run({"resolve", data_path("every_husband.drs")});
  CHECK(husband.code == 0);
  CHECK(husband.out.find("{u->y, v->x}") != std::string::npos);

  auto man = run({"resolve", data_path("every_man.drs"), "--json"});
  REQUIRE(man.code == 0);
  json j = json::parse(man.out);
  const auto& alpha = j["alphas"][0];
  CHECK(alpha["resolutions"].empty());
  CHECK(alpha["candidates"][0]["site"] == "global");
  CHECK(alpha["candidates"][0]["blocked"] == "x occurs free in of(u,x)");
}

TEST_CASE("readings with the marriage postulate") {
  auto r = run({"readings", data_path("hank.drs"), "--bg", data_path("marriage.bg"), "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["version"] == "ctxdrt/1");
  const auto& rs = j["readings"];
  REQUIRE(rs.size() == 2);
  CHECK(rs[0]["site"] == "intermediate");
  CHECK(rs[1]["site"] == "local");
  CHECK(rs[0]["bindings"] == rs[1]["bindings"]);
  CHECK(rs[0]["informativity"]["status"] == "pass");
}

TEST_CASE("unfiltered readings") {
  auto r = run({"readings", data_path("hank.drs"), "--no-filter", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["readings"].size() == 5);
}

TEST_CASE("no admissible reading") {
  std::string path = "/tmp/ctxdrt_cli_test_contradiction.drs";
  std::ofstream(path) << "[ | not [x | p(x)], alpha:[u | p(u)]]\n";
  auto r = run({"readings", path});
  CHECK(r.code == ctxdrt::cli::kNoReading);
}

TEST_CASE("extract") {
  auto r = run({"extract", data_path("hank.drs")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind(std::string(kHankFormula) + "\n", 0) == 0);
  CHECK(r.out.find("# task 1: global@root{v->x}") != std::string::npos);

  std::string path = "/tmp/ctxdrt_cli_test_plain.drs";
  std::ofstream(path) << "[ | p(a)]\n";
  auto none = run({"extract", path, "--json"});
  CHECK(none.code == 0);
  CHECK(json::parse(none.out) == json::parse(R"({"tasks": [], "version": "ctxdrt/1"})"));
}

TEST_CASE("prove a context formula") {
  auto r = run({"prove", data_path("hank.lcon"), "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["verdicts"].size() == 3);
  for (const auto& v : j["verdicts"]) CHECK(v["status"] == "open-saturated");
}

TEST_CASE("compare") {
  auto r = run({"compare", data_path("hank.drs"), "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["ratio"]["hank(x)"] == 5.0);
  CHECK(j["ratio"]["married(x)"] == 5.0);
  CHECK(j["verdictsAgree"] == true);
  CHECK(j["readings"].size() == 5);
  CHECK(run({"compare", data_path("hank.drs"), "--json"}).out == r.out);
}
