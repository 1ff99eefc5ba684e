// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/workbench.hpp"

#include <cstdlib>

#include "siegelwb/error.hpp"
#include "siegelwb/schottky.hpp"
#include "siegelwb/theta.hpp"

namespace siegelwb {

namespace {

std::shared_ptr<CountCache> open_cache(const WorkbenchConfig& config) {
  if (config.cache_path) return std::make_shared<CountCache>(*config.cache_path);
  if (config.use_environment) {
    const char* env = std::getenv(kCacheEnvVar);
    if (env != nullptr && *env != '\0') return std::make_shared<CountCache>(std::filesystem::path(env));
  }
  return std::make_shared<CountCache>();
}

}  // namespace

Workbench::Workbench(WorkbenchConfig config) : config_(std::move(config)), cache_(open_cache(config_)) {
  require(config_.threads >= 1, ErrorCode::invalid_argument, "threads must be at least 1");
}

RepresentationCounter& Workbench::counter(const std::string& lattice_name) {
  std::lock_guard lock(mutex_);
  auto it = counters_.find(lattice_name);
  if (it == counters_.end()) {
    CountOptions options{config_.threads, config_.dedup, config_.verify_cache};
    it = counters_
             .emplace(lattice_name,
                      std::make_unique<RepresentationCounter>(build_lattice(lattice_name), options, cache_))
             .first;
  }
  return *it->second;
}

FourierExpansion Workbench::form(const std::string& form_name, int genus, std::int64_t max_trace) {
  if (form_name == "schottky") return schottky_expansion(counter("E8x2"), counter("D16plus"), genus, max_trace);
  return theta_expansion(counter(form_name), genus, max_trace);
}

CountStats Workbench::stats() const {
  std::lock_guard lock(mutex_);
  CountStats total;
  for (const auto& [name, c] : counters_) {
    const CountStats s = c->stats();
    total.calls += s.calls;
    total.hits += s.hits;
    total.misses += s.misses;
    total.verified += s.verified;
  }
  return total;
}

}  // namespace siegelwb
