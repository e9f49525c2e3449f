#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "cisys/cache.hpp"
#include "cisys/error.hpp"

using namespace cisys;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("cisys-test-cache-" + tag);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("second load is a hit with the identical table") {
  const TableCache c(fresh_dir("hit"));
  const RootSystemSpec d4{Family::D, 4};
  const auto first = c.load_or_build(d4);
  CHECK_FALSE(first.hit);
  CHECK(first.warnings.empty());
  CHECK(fs::exists(c.file_for(d4)));
  const auto second = c.load_or_build(d4);
  CHECK(second.hit);
  CHECK(second.algebra.table_hash() == first.algebra.table_hash());
  CHECK(second.algebra.table_text() == first.algebra.table_text());
  const LieAlgebra fresh = build_chevalley(build_root_system(d4));
  CHECK(second.algebra.table_json() == fresh.table_json());
}

TEST_CASE("a tampered coefficient is caught by the checksum and rebuilt") {
  const TableCache c(fresh_dir("tamper"));
  const RootSystemSpec d4{Family::D, 4};
  const auto built = c.load_or_build(d4);
  nlohmann::json doc;
  {
    std::ifstream in(c.file_for(d4));
    doc = nlohmann::json::parse(in);
  }
  doc["table"]["brackets"][0][3] = "7";  // still valid JSON, wrong structure constant
  {
    std::ofstream out(c.file_for(d4), std::ios::trunc);
    out << doc.dump();
  }
  const auto again = c.load_or_build(d4);
  CHECK_FALSE(again.hit);
  REQUIRE(again.warnings.size() == 1);
  CHECK(again.warnings[0].find("checksum") != std::string::npos);
  CHECK(again.algebra.table_hash() == built.algebra.table_hash());
  CHECK(c.load_or_build(d4).hit);
}

TEST_CASE("truncated and foreign files are rebuilt") {
  const TableCache c(fresh_dir("junk"));
  const RootSystemSpec a3{Family::A, 3};
  fs::create_directories(c.dir());
  {
    std::ofstream out(c.file_for(a3));
    out << "{\"format\": \"cisys-structure-";
  }
  auto r = c.load_or_build(a3);
  CHECK_FALSE(r.hit);
  CHECK(r.warnings.size() == 1);
  {
    std::ofstream out(c.file_for(a3), std::ios::trunc);
    out << R"({"format": "something-else"})";
  }
  r = c.load_or_build(a3);
  CHECK_FALSE(r.hit);
  CHECK(r.warnings.size() == 1);
  CHECK(c.load_or_build(a3).hit);
}

TEST_CASE("a table stored under another name is not accepted") {
  const TableCache c(fresh_dir("swap"));
  const RootSystemSpec d4{Family::D, 4}, d5{Family::D, 5};
  c.build(d4);
  fs::create_directories(c.dir());
  fs::copy_file(c.file_for(d4), c.file_for(d5), fs::copy_options::overwrite_existing);
  const auto r = c.load_or_build(d5);
  CHECK_FALSE(r.hit);
  CHECK(r.algebra.dim() == 45);
}

TEST_CASE("clear removes tables and the next load rebuilds") {
  const TableCache c(fresh_dir("clear"));
  const RootSystemSpec d4{Family::D, 4}, a3{Family::A, 3};
  c.build(d4);
  c.build(a3);
  CHECK(c.clear(d4));
  CHECK_FALSE(c.clear(d4));
  CHECK_FALSE(c.load_or_build(d4).hit);
  CHECK(c.clear_all() == 2);
  CHECK(c.clear_all() == 0);
}

TEST_CASE("file names carry the type and the code version") {
  const TableCache c("/nonexistent");
  const std::string name = c.file_for({Family::E, 6}).filename().string();
  CHECK(name.rfind("E6-v", 0) == 0);
}

TEST_CASE("unwritable directory surfaces the path") {
  const fs::path blocker = fresh_dir("blocker");
  { std::ofstream(blocker.string()) << "x"; }
  const TableCache c(blocker / "sub");
  try {
    c.build({Family::A, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(blocker.string()) != std::string::npos);
  }
  const auto r = c.load_or_build({Family::A, 2});
  CHECK(r.algebra.dim() == 8);
  CHECK(r.warnings.size() == 1);
  fs::remove(blocker);
}

TEST_CASE("environment override of the default directory") {
  setenv("CISYS_CACHE_DIR", "/tmp/cisys-env-dir", 1);
  CHECK(TableCache::default_dir() == fs::path("/tmp/cisys-env-dir"));
  unsetenv("CISYS_CACHE_DIR");
  setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(TableCache::default_dir() == fs::path("/tmp/xdg/cisys"));
  unsetenv("XDG_CACHE_HOME");
}
