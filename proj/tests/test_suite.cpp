#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "ah/suite.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace ah;
using ah::test::kind_of;

TEST_CASE("A1 suite passes with default bounds") {
  const SuiteReport r = run_suite("A1_adj");
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(r.passed());
  CHECK(r.checks.size() >= 30);
}

TEST_CASE("suite errors") {
  CHECK(kind_of([] { run_suite("G2_adj"); }) == ErrorKind::UnknownPreset);
  SuiteOptions big;
  big.kl_len = 1000;
  CHECK(kind_of([&] { run_suite("A2_adj", big); }) == ErrorKind::BoundsTooLarge);
  SuiteOptions many;
  many.samples = 10000000;
  CHECK(kind_of([&] { run_suite("A1_adj", many); }) == ErrorKind::BoundsTooLarge);
  SuiteOptions crit;
  crit.criterion = 12;
  CHECK(kind_of([&] { run_suite("A1_adj", crit); }) == ErrorKind::MalformedInput);
}

TEST_CASE("fault injection is caught with a counterexample") {
  SuiteOptions o;
  o.fault_length = true;
  o.only = "res_complement";
  const SuiteReport r = run_suite("A1_adj", o);
  REQUIRE(r.checks.size() == 1);
  CHECK_FALSE(r.checks[0].passed);
  CHECK(r.checks[0].counterexample.find("ahcalc --preset A1_adj --fault-length wext len --elt") == 0);
  CHECK_FALSE(r.passed());
}

TEST_CASE("output is byte-stable for a fixed seed") {
  SuiteOptions o;
  o.seed = 42;
  o.samples = 100;
  o.criterion = 5;
  const std::string a = run_suite("B2_adj", o).tsv(false);
  const std::string b = run_suite("B2_adj", o).tsv(false);
  CHECK(a == b);
  CHECK(run_suite("B2_adj", o).json(false) == run_suite("B2_adj", o).json(false));
}

TEST_CASE("a check does not depend on which other checks run") {
  SuiteOptions all;
  all.seed = 3;
  all.samples = 50;
  all.criterion = 5;
  const SuiteReport r = run_suite("A2_adj", all);
  SuiteOptions one = all;
  one.only = "porder_property_4";
  const SuiteReport s = run_suite("A2_adj", one);
  REQUIRE(s.checks.size() == 1);
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.name == "porder_property_4"; });
  REQUIRE(it != r.checks.end());
  CHECK(it->passed == s.checks[0].passed);
}

TEST_CASE("report formats") {
  SuiteOptions o;
  o.criterion = 3;
  const SuiteReport r = run_suite("A1_adj", o);
  CHECK(r.tsv(false) == "A1_adj\tres_complement\tpass\n");
  const auto j = nlohmann::json::parse(r.json(false));
  CHECK(j["preset"] == "A1_adj");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 1);
  CHECK(j["checks"][0]["criterion"] == 3);
  CHECK_FALSE(j["checks"][0].contains("micros"));
  CHECK(nlohmann::json::parse(r.json(true))["checks"][0].contains("micros"));
  CHECK(default_kl_len("A2_adj") == 8);
}
