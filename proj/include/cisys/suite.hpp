#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "cisys/report.hpp"

namespace cisys {

struct SuiteOptions {
  std::string type = "D4";
  std::optional<std::filesystem::path> cache_dir;  // unset: TableCache::default_dir()
  std::uint64_t seed = 1;
  bool expect_no_omega3 = false;
  unsigned jobs = 1;
  int intertwining_degree = 3;
  int basis_trials = 5;
};

/// Runs every check for the type. With expect_no_omega3 the structure checks
/// and the negative control run, and each s*-dependent check is recorded as
/// skipped with a reason. Throws SpecError for an invalid type.
VerificationReport run_suite(const SuiteOptions& opt);

}  // namespace cisys
