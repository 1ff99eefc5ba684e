// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>
#include <unistd.h>

#include "siegelwb/cache.hpp"
#include "siegelwb/error.hpp"
#include "siegelwb/representation.hpp"
#include "siegelwb/schottky.hpp"
#include "siegelwb/theta.hpp"
#include "siegelwb/workbench.hpp"

using namespace siegelwb;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("siegelwb-cache-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) n += !line.empty();
  return n;
}

}  // namespace

TEST_CASE("memory cache put and get") {
  CountCache c;
  CHECK_FALSE(c.get("E8", "g=1;2").has_value());
  c.put({"E8", "g=1;2", 240});
  CHECK(c.get("E8", "g=1;2") == Integer(240));
  CHECK_FALSE(c.get("D16plus", "g=1;2").has_value());
  CHECK(c.size() == 1);
  CHECK_FALSE(c.path().has_value());
}

TEST_CASE("record serialization") {
  const CacheRecord r{"E8x2", "g=2;2,1,2", Integer("340282366920938463463374607431768211457")};
  const auto back = parse_record(serialize_record(r));
  REQUIRE(back.has_value());
  CHECK(back->lattice_id == r.lattice_id);
  CHECK(back->index_key == r.index_key);
  CHECK(back->count == r.count);
  CHECK(back->engine_version == kEngineVersion);
  CHECK_FALSE(parse_record("{\"lattice\":\"E8\"}").has_value());
  CHECK_FALSE(parse_record("not json").has_value());
  CHECK_FALSE(parse_record(R"({"lattice":"E8","key":"g=1;2","count":"-5","engine":"x"})").has_value());
}

TEST_CASE("file cache persists across instances") {
  TempDir dir;
  const fs::path file = dir.path / "counts.jsonl";
  {
    CountCache c(file);
    c.put({"E8", "g=1;2", 240});
    c.put({"E8", "g=1;2", 240});
    c.put({"D16plus", "g=1;2", 480});
  }
  CHECK(line_count(file) == 2);
  CountCache again(file);
  CHECK(again.get("E8", "g=1;2") == Integer(240));
  CHECK(again.get("D16plus", "g=1;2") == Integer(480));
  const CacheFileStats st = again.file_stats();
  CHECK(st.records == 2);
  CHECK(st.per_lattice.at("E8") == 1);
  CHECK_FALSE(st.rebuilt);
}

TEST_CASE("records from another engine version are ignored") {
  TempDir dir;
  const fs::path file = dir.path / "counts.jsonl";
  {
    std::ofstream out(file);
    out << serialize_record({"E8", "g=1;2", 999, "older-engine"}) << "\n";
  }
  CountCache c(file);
  CHECK_FALSE(c.get("E8", "g=1;2").has_value());
  CHECK(c.file_stats().foreign_records == 1);
}

TEST_CASE("a corrupt file is moved aside and never yields counts") {
  TempDir dir;
  const fs::path file = dir.path / "counts.jsonl";
  {
    std::ofstream out(file);
    out << serialize_record({"E8", "g=1;2", 240}) << "\n";
    out << "{\"lattice\": \"E8\", \"key\": \"g=1;4\", \"cou\n";
  }
  CountCache c(file);
  CHECK(c.file_stats().rebuilt);
  CHECK(c.size() == 0);
  CHECK_FALSE(c.get("E8", "g=1;2").has_value());
  CHECK(fs::exists(dir.path / "counts.jsonl.corrupt"));
  c.put({"E8", "g=1;2", 240});
  CHECK(line_count(file) == 1);
}

TEST_CASE("conflicting duplicates are dropped") {
  TempDir dir;
  const fs::path file = dir.path / "counts.jsonl";
  {
    std::ofstream out(file);
    out << serialize_record({"E8", "g=1;2", 240}) << "\n";
    out << serialize_record({"E8", "g=1;2", 241}) << "\n";
    out << serialize_record({"E8", "g=1;4", 2160}) << "\n";
  }
  CountCache c(file);
  CHECK_FALSE(c.get("E8", "g=1;2").has_value());
  CHECK(c.get("E8", "g=1;4") == Integer(2160));
  CHECK(c.file_stats().records == 1);
}

TEST_CASE("cache hits equal recomputation") {
  TempDir dir;
  const fs::path file = dir.path / "counts.jsonl";
  FourierExpansion cold(3, 4, 6), warm(3, 4, 6), fresh(3, 4, 6);
  {
    RepresentationCounter c(build_lattice("E8"), {}, std::make_shared<CountCache>(file));
    cold = theta_expansion(c, 3, 6);
    CHECK(c.stats().misses > 0);
  }
  {
    RepresentationCounter c(build_lattice("E8"), {1, true, true}, std::make_shared<CountCache>(file));
    warm = theta_expansion(c, 3, 6);
    const CountStats st = c.stats();
    CHECK(st.misses == 0);
    CHECK(st.hits == st.calls);
    CHECK(st.verified == (st.hits + 99) / 100);
  }
  RepresentationCounter nocache(build_lattice("E8"), {1, false, false});
  fresh = theta_expansion(nocache, 3, 6);
  CHECK(cold == warm);
  CHECK(warm == fresh);
}

TEST_CASE("verify mode detects a tampered cache") {
  TempDir dir;
  const fs::path file = dir.path / "counts.jsonl";
  {
    std::ofstream out(file);
    out << serialize_record({"E8", "g=1;2", 241}) << "\n";
  }
  RepresentationCounter trusting(build_lattice("E8"), {}, std::make_shared<CountCache>(file));
  CHECK(trusting.count(SymMatrix::from_rows({{2}})) == 241);
  RepresentationCounter checking(build_lattice("E8"), {1, true, true}, std::make_shared<CountCache>(file));
  try {
    checking.count(SymMatrix::from_rows({{2}}));
    FAIL("expected a cache mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cache_mismatch);
  }
}

TEST_CASE("concurrent writers share one file") {
  TempDir dir;
  const fs::path file = dir.path / "counts.jsonl";
  auto cache_a = std::make_shared<CountCache>(file);
  auto cache_b = std::make_shared<CountCache>(file);
  std::thread a([&] {
    for (int k = 0; k < 200; ++k) cache_a->put({"E8", "g=1;" + std::to_string(2 * k), k});
  });
  std::thread b([&] {
    for (int k = 0; k < 200; ++k) cache_b->put({"D16plus", "g=1;" + std::to_string(2 * k), k});
  });
  a.join();
  b.join();
  CountCache reread(file);
  CHECK(reread.size() == 400);
  CHECK_FALSE(reread.file_stats().rebuilt);
}

TEST_CASE("session statistics after a genus-3 run") {
  TempDir dir;
  WorkbenchConfig cfg;
  cfg.cache_path = dir.path / "counts.jsonl";
  Workbench wb(cfg);
  const auto report = verify_vanishing(wb.counter("E8x2"), wb.counter("D16plus"), 3, 4);
  CHECK(report.passed);
  const CountStats st = wb.stats();
  CHECK(st.calls == 2 * report.indices_checked);
  CHECK(st.hits + st.misses == st.calls);
}
