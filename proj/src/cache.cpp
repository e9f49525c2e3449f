#include "cisys/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cisys/error.hpp"
#include "cisys/hash.hpp"
#include "cisys/version.hpp"

namespace fs = std::filesystem;

namespace cisys {

namespace {

constexpr const char* kFormat = "cisys-structure-table";

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

}  // namespace

fs::path TableCache::default_dir() {
  if (const char* d = std::getenv("CISYS_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "cisys";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "cisys";
  return fs::temp_directory_path() / "cisys-cache";
}

fs::path TableCache::file_for(const RootSystemSpec& spec) const {
  return dir_ / (spec.name() + "-v" + kCodeVersion + ".json");
}

void TableCache::write(const RootSystemSpec& spec, const LieAlgebra& L) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const nlohmann::json table = L.table_json();
  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["code_version"] = kCodeVersion;
  doc["algebra"] = spec.name();
  doc["checksum"] = hex64(fnv1a64(table.dump()));
  doc["table"] = table;
  const fs::path p = file_for(spec);
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << doc.dump() << "\n";
    if (!out) throw Error("write failed for cache file " + tmp.string());
  }
  fs::rename(tmp, p, ec);
  if (ec) throw Error("cannot move cache file into place at " + p.string() + ": " + ec.message());
}

LieAlgebra TableCache::build(const RootSystemSpec& spec) const {
  LieAlgebra L = build_chevalley(build_root_system(spec));
  write(spec, L);
  return L;
}

TableCache::Loaded TableCache::load_or_build(const RootSystemSpec& spec) const {
  const fs::path p = file_for(spec);
  std::vector<std::string> warnings;
  if (fs::exists(p)) {
    try {
      std::ifstream in(p, std::ios::binary);
      if (!in) throw Error("cannot open");
      const nlohmann::json doc = nlohmann::json::parse(in);
      if (doc.at("format") != kFormat) throw Error("unknown format");
      if (doc.at("code_version") != kCodeVersion) throw Error("stale code version");
      if (doc.at("algebra") != spec.name()) throw Error("algebra mismatch");
      const nlohmann::json& table = doc.at("table");
      if (doc.at("checksum").get<std::string>() != hex64(fnv1a64(table.dump()))) throw Error("checksum mismatch");
      return {lie_algebra_from_json(table), true, {}};
    } catch (const std::exception& e) {
      warnings.push_back("cache file " + p.string() + " is invalid (" + e.what() + "); rebuilding");
    }
  }
  LieAlgebra L = build_chevalley(build_root_system(spec));
  try {
    write(spec, L);
  } catch (const Error& e) {
    warnings.push_back(std::string("could not store table: ") + e.what());
  }
  return {std::move(L), false, std::move(warnings)};
}

bool TableCache::clear(const RootSystemSpec& spec) const {
  std::error_code ec;
  const bool removed = fs::remove(file_for(spec), ec);
  if (ec) throw Error("cannot remove " + file_for(spec).string() + ": " + ec.message());
  return removed;
}

std::size_t TableCache::clear_all() const {
  std::size_t n = 0;
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    const std::string name = e.path().filename().string();
    if (e.is_regular_file() && name.size() > 5 && name.ends_with(".json") && name.find("-v") != std::string::npos) {
      fs::remove(e.path(), ec);
      if (ec) throw Error("cannot remove " + e.path().string() + ": " + ec.message());
      ++n;
    }
  }
  return n;
}

}  // namespace cisys
