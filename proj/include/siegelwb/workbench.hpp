// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_WORKBENCH_HPP
#define SIEGELWB_WORKBENCH_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "siegelwb/cache.hpp"
#include "siegelwb/evaluation.hpp"
#include "siegelwb/expansion.hpp"
#include "siegelwb/representation.hpp"

namespace siegelwb {

struct WorkbenchConfig {
  /// Cache file; when unset the SIEGELWB_CACHE environment variable is used,
  /// and without it the cache is memory-only.
  std::optional<std::filesystem::path> cache_path;
  bool use_environment = true;
  unsigned threads = 1;
  bool dedup = true;
  bool verify_cache = false;
  Precision precision = Precision::standard;
};

/// Owns one counter per lattice, all sharing one count cache.
class Workbench {
 public:
  explicit Workbench(WorkbenchConfig config = {});

  const WorkbenchConfig& config() const noexcept { return config_; }
  RepresentationCounter& counter(const std::string& lattice_name);
  std::shared_ptr<CountCache> cache() const { return cache_; }

  /// Forms: a lattice name ("E8", "E8x2", "D16plus") for its theta series,
  /// or "schottky" for F_g.
  FourierExpansion form(const std::string& form_name, int genus, std::int64_t max_trace);

  CountStats stats() const;

 private:
  WorkbenchConfig config_;
  std::shared_ptr<CountCache> cache_;
  mutable std::mutex mutex_;
  std::map<std::string, std::unique_ptr<RepresentationCounter>> counters_;
};

}  // namespace siegelwb

#endif  // SIEGELWB_WORKBENCH_HPP
