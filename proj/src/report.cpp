#include "cisys/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "cisys/error.hpp"

namespace cisys {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    if (c.status == Status::Skipped) return c.data.contains("reason");
    return c.status == Status::Pass;
  });
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["code_version"] = code_version;
  j["algebra"] = algebra;
  j["seed"] = seed;
  j["expect_no_omega3"] = expect_no_omega3;
  j["table_hash"] = table_hash;
  j["graded_dims"] = graded_dims;
  j["components"] = components;
  j["special_values"] = special_values;
  j["passed"] = passed();
  j["warnings"] = warnings;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"identity", c.identity},
                           {"status", status_str(c.status)},
                           {"witness", c.witness},
                           {"wall_time", c.wall_time},
                           {"data", c.data}});
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    r.code_version = j.at("code_version").get<std::string>();
    r.algebra = j.at("algebra").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.expect_no_omega3 = j.at("expect_no_omega3").get<bool>();
    r.table_hash = j.at("table_hash").get<std::string>();
    r.graded_dims = j.at("graded_dims").get<std::array<std::size_t, 5>>();
    r.components = j.at("components").get<std::vector<std::string>>();
    r.special_values = j.at("special_values");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& c : j.at("checks")) {
      CheckResult e;
      e.name = c.at("name").get<std::string>();
      e.identity = c.at("identity").get<std::string>();
      e.status = parse_status(c.at("status").get<std::string>());
      e.witness = c.at("witness").get<std::string>();
      e.wall_time = c.at("wall_time").get<double>();
      e.data = c.at("data");
      r.checks.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "algebra " << algebra << "  dims (" << graded_dims[0];
  for (std::size_t k = 1; k < 5; ++k) os << ", " << graded_dims[k];
  os << ")  components";
  for (const auto& c : components) os << " " << c;
  os << "\n";
  os << "special values " << special_values.value("values", nlohmann::json("n/a")).dump();
  if (special_values.contains("s_star"))
    os << "  s* = " << special_values["s_star"].get<std::string>() << " in M(C_{s dchi}), bundle index "
       << special_values["bundle_index"].get<std::string>();
  os << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  for (const auto& c : checks) {
    os << std::left << std::setw(8) << status_str(c.status) << std::setw(44) << c.name << std::fixed << std::setprecision(3)
       << c.wall_time << "s  " << c.identity << "\n";
    if (!c.witness.empty()) os << "        witness: " << c.witness << "\n";
    if (c.status == Status::Skipped && c.data.contains("reason")) os << "        " << c.data["reason"].get<std::string>() << "\n";
  }
  os << (passed() ? "RESULT pass" : "RESULT fail") << "\n";
  return os.str();
}

}  // namespace cisys
