#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cisys/omega.hpp"

namespace cisys {

struct VerificationReport {
  int schema_version = 0;
  std::string code_version;
  std::string algebra;  // e.g. "D4"
  std::uint64_t seed = 0;
  bool expect_no_omega3 = false;
  std::string table_hash;  // hex FNV-1a of the structure-constant table
  std::array<std::size_t, 5> graded_dims{};
  std::vector<std::string> components;
  /// "values" (list or "all s"), and when unique "s_star" in the M(C_{s dchi})
  /// convention plus "bundle_index" = -s_star.
  nlohmann::json special_values = nlohmann::json::object();
  std::vector<CheckResult> checks;  // sorted by name
  std::vector<std::string> warnings;

  /// Every check passed; skipped entries count as failures unless flagged in data["reason"].
  bool passed() const;
  void sort_checks();
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string text() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace cisys
