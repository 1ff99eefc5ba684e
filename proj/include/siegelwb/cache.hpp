// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_CACHE_HPP
#define SIEGELWB_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "siegelwb/integer.hpp"

namespace siegelwb {

/// Bumped whenever the counting algorithm changes; older records are ignored.
inline constexpr const char* kEngineVersion = "siegelwb-count-1";

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnvVar = "SIEGELWB_CACHE";

struct CacheRecord {
  std::string lattice_id;
  std::string index_key;  ///< SymMatrix::key() of the canonical reduced target
  Integer count;
  std::string engine_version = kEngineVersion;
};

struct CacheFileStats {
  std::size_t records = 0;            ///< records for the current engine
  std::size_t foreign_records = 0;    ///< records from other engine versions
  std::map<std::string, std::size_t> per_lattice;
  bool rebuilt = false;               ///< a corrupt file was moved aside
};

/// Append-only JSON-lines store of representation counts with an in-memory
/// index. Without a path it is memory-only.
///
/// Writers take an exclusive flock on the file for each append; the file is
/// read once at construction. A line that fails to parse makes the whole file
/// suspect: it is renamed to `<path>.corrupt` and the cache starts empty.
class CountCache {
 public:
  CountCache() = default;
  explicit CountCache(std::filesystem::path path);

  std::optional<Integer> get(const std::string& lattice_id, const std::string& index_key) const;
  void put(const CacheRecord& record);

  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }
  CacheFileStats file_stats() const;
  std::size_t size() const;

 private:
  void load();

  std::optional<std::filesystem::path> path_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, std::string>, Integer> index_;
  CacheFileStats stats_;
};

std::string serialize_record(const CacheRecord& record);
/// Returns nullopt on any malformed field.
std::optional<CacheRecord> parse_record(const std::string& line);

}  // namespace siegelwb

#endif  // SIEGELWB_CACHE_HPP
