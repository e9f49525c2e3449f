#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cisys/liealg.hpp"

namespace cisys {

/// On-disk structure-constant tables keyed by (family, rank, code version).
/// Each file embeds an FNV-1a checksum of its table; unreadable, stale or
/// corrupt files are rebuilt with a warning.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// $CISYS_CACHE_DIR, else $XDG_CACHE_HOME/cisys, else ~/.cache/cisys, else the temp dir.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const RootSystemSpec& spec) const;

  struct Loaded {
    LieAlgebra algebra;
    bool hit = false;
    std::vector<std::string> warnings;
  };
  /// Reads the table if present and valid, otherwise builds and stores it.
  Loaded load_or_build(const RootSystemSpec& spec) const;
  /// Builds and writes (overwriting) the table. Throws Error with the path on IO failure.
  LieAlgebra build(const RootSystemSpec& spec) const;
  /// Removes the table for spec; returns whether a file was removed.
  bool clear(const RootSystemSpec& spec) const;
  /// Removes every table file in the directory; returns the count.
  std::size_t clear_all() const;

 private:
  void write(const RootSystemSpec& spec, const LieAlgebra& L) const;
  std::filesystem::path dir_;
};

}  // namespace cisys
