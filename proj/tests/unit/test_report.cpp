#include "doctest.h"

#include <filesystem>

#include "cisys/error.hpp"
#include "cisys/suite.hpp"

using namespace cisys;

namespace {

std::filesystem::path scratch_cache() {
  auto p = std::filesystem::temp_directory_path() / "cisys-test-report-cache";
  std::filesystem::create_directories(p);
  return p;
}

const VerificationReport& d4_report() {
  static const VerificationReport r = [] {
    SuiteOptions o;
    o.type = "D4";
    o.cache_dir = scratch_cache();
    return run_suite(o);
  }();
  return r;
}

}  // namespace

TEST_CASE("D4 suite passes every check") {
  const auto& r = d4_report();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.status == Status::Pass);
    CHECK(!c.identity.empty());
  }
  CHECK(r.passed());
  CHECK(r.checks.size() == 29);
  CHECK(r.graded_dims == std::array<std::size_t, 5>{1, 8, 10, 8, 1});
  CHECK(r.components.size() == 3);
  CHECK(r.special_values["s_star"] == "-1");
  CHECK(r.special_values["bundle_index"] == "1");
}

TEST_CASE("report checks are sorted by name") {
  const auto& c = d4_report().checks;
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].name < c[i].name);
}

TEST_CASE("report JSON round-trips") {
  const auto& r = d4_report();
  const auto j = r.to_json();
  CHECK(j["schema_version"] == 1);
  const VerificationReport back = VerificationReport::from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == r);
  CHECK(back.to_json() == j);
  nlohmann::json bad = j;
  bad.erase("checks");
  CHECK_THROWS_AS(VerificationReport::from_json(bad), SpecError);
}

TEST_CASE("text report lists every check and the result") {
  const std::string t = d4_report().text();
  for (const auto& c : d4_report().checks) CHECK(t.find(c.name) != std::string::npos);
  CHECK(t.find("RESULT pass") != std::string::npos);
}

TEST_CASE("statuses do not depend on the seed") {
  SuiteOptions o;
  o.type = "D4";
  o.cache_dir = scratch_cache();
  o.seed = 12345;
  const auto other = run_suite(o);
  REQUIRE(other.checks.size() == d4_report().checks.size());
  for (std::size_t i = 0; i < other.checks.size(); ++i) {
    CHECK(other.checks[i].name == d4_report().checks[i].name);
    CHECK(other.checks[i].status == d4_report().checks[i].status);
  }
}

TEST_CASE("negative-control runs flag their skips") {
  SuiteOptions o;
  o.type = "D5";
  o.cache_dir = scratch_cache();
  o.expect_no_omega3 = true;
  const auto r = run_suite(o);
  CHECK(r.passed());
  CHECK(r.graded_dims == std::array<std::size_t, 5>{1, 12, 19, 12, 1});
  CHECK(r.special_values["values"] == nlohmann::json::array());
  bool saw_control = false;
  for (const auto& c : r.checks) {
    if (c.status == Status::Skipped) CHECK(c.data.contains("reason"));
    if (c.name == "negative_control.no_omega3_system") saw_control = c.status == Status::Pass;
  }
  CHECK(saw_control);
}

TEST_CASE("expectations that do not match the type fail") {
  SuiteOptions o;
  o.cache_dir = scratch_cache();
  o.type = "D4";
  o.expect_no_omega3 = true;
  CHECK_FALSE(run_suite(o).passed());
  o.type = "A3";
  o.expect_no_omega3 = false;
  const auto r = run_suite(o);
  CHECK_FALSE(r.passed());
  for (const auto& c : r.checks) CHECK(c.status != Status::Skipped);
}

TEST_CASE("an unflagged skip counts as a failure") {
  VerificationReport r;
  CheckResult c;
  c.name = "x";
  c.status = Status::Skipped;
  r.checks.push_back(c);
  CHECK_FALSE(r.passed());
  r.checks[0].data["reason"] = "not applicable";
  CHECK(r.passed());
}

TEST_CASE("invalid types are rejected") {
  SuiteOptions o;
  o.cache_dir = scratch_cache();
  o.type = "G2";
  CHECK_THROWS_AS(run_suite(o), SpecError);
}
