// Command-line harness: verification suites and the structure-table cache.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cisys/cache.hpp"
#include "cisys/error.hpp"
#include "cisys/suite.hpp"

namespace {

int cmd_verify(const cisys::SuiteOptions& opt, const std::string& json_path) {
  const cisys::VerificationReport rep = cisys::run_suite(opt);
  std::cout << rep.text();
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write report to " << json_path << "\n";
      return 3;
    }
    out << rep.to_json().dump(2) << "\n";
    if (!out) {
      std::cerr << "error: write failed for " << json_path << "\n";
      return 3;
    }
  }
  return rep.passed() ? 0 : 1;
}

int cmd_cache(const std::string& action, const std::string& type, const std::string& dir) {
  const cisys::TableCache cache(dir.empty() ? cisys::TableCache::default_dir() : std::filesystem::path(dir));
  if (action == "clear") {
    if (type.empty()) {
      std::cout << "removed " << cache.clear_all() << " table(s) from " << cache.dir().string() << "\n";
    } else {
      const auto spec = cisys::RootSystemSpec::parse(type);
      std::cout << (cache.clear(spec) ? "removed " : "absent ") << cache.file_for(spec).string() << "\n";
    }
    return 0;
  }
  const auto spec = cisys::RootSystemSpec::parse(type);
  const auto loaded = cache.load_or_build(spec);
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
  std::ostringstream h;
  h << std::hex << loaded.algebra.table_hash();
  std::cout << (loaded.hit ? "hit " : "built ") << spec.name() << " " << h.str() << " " << cache.file_for(spec).string()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of conformally invariant systems"};
  app.require_subcommand(1);

  cisys::SuiteOptions opt;
  std::string json_path, vdir;
  auto* verify = app.add_subcommand("verify", "run the verification suite for one type");
  verify->add_option("--type", opt.type, "A<r>, D<r> or E<r>")->required();
  verify->add_option("--emit-json", json_path, "write the JSON report here");
  verify->add_option("--cache-dir", vdir, "structure-table cache directory");
  verify->add_option("--seed", opt.seed, "seed for randomized-basis checks");
  verify->add_flag("--expect-no-omega3", opt.expect_no_omega3, "negative control: no special value expected");
  verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string action, ctype, cdir;
  auto* cache = app.add_subcommand("cache", "manage the structure-table cache");
  cache->add_option("action", action, "build or clear")->required()->check(CLI::IsMember({"build", "clear"}));
  cache->add_option("--type", ctype, "A<r>, D<r> or E<r>");
  cache->add_option("--cache-dir", cdir, "structure-table cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (!vdir.empty()) opt.cache_dir = vdir;
      return cmd_verify(opt, json_path);
    }
    if (action == "build" && ctype.empty()) {
      std::cerr << "error: cache build needs --type\n";
      return 2;
    }
    return cmd_cache(action, ctype, cdir);
  } catch (const cisys::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
