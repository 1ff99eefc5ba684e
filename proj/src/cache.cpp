// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "siegelwb/error.hpp"
#include "siegelwb/sym_matrix.hpp"

namespace siegelwb {

namespace {

// Holds an flock for the lifetime of the object.
class FileLock {
 public:
  FileLock(const std::filesystem::path& path, int operation) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd_ < 0) fail(ErrorCode::io_error, "cannot open cache file " + path.string());
    if (::flock(fd_, operation) != 0) {
      ::close(fd_);
      fail(ErrorCode::io_error, "cannot lock cache file " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

  int fd() const noexcept { return fd_; }

 private:
  int fd_ = -1;
};

}  // namespace

std::string serialize_record(const CacheRecord& record) {
  nlohmann::ordered_json j;
  j["lattice"] = record.lattice_id;
  j["key"] = record.index_key;
  j["count"] = record.count.str();
  j["engine"] = record.engine_version;
  return j.dump();
}

std::optional<CacheRecord> parse_record(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    if (!j.is_object()) return std::nullopt;
    CacheRecord r;
    r.lattice_id = j.at("lattice").get<std::string>();
    r.index_key = j.at("key").get<std::string>();
    r.engine_version = j.at("engine").get<std::string>();
    r.count = parse_integer(j.at("count").get<std::string>());
    if (r.count < 0 || r.lattice_id.empty()) return std::nullopt;
    if (r.index_key != "g=0;") (void)SymMatrix::from_key(r.index_key);
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

void CountCache::load() {
  std::error_code ec;
  if (!std::filesystem::exists(*path_, ec)) return;
  std::vector<CacheRecord> records;
  bool corrupt = false;
  {
    FileLock lock(*path_, LOCK_SH);
    std::ifstream in(*path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      auto r = parse_record(line);
      if (!r) {
        std::cerr << "siegelwb: warning: corrupt cache line " << lineno << " in " << path_->string()
                  << "; discarding the cache file\n";
        corrupt = true;
        break;
      }
      records.push_back(std::move(*r));
    }
  }
  if (corrupt) {
    std::filesystem::path aside = *path_;
    aside += ".corrupt";
    std::filesystem::rename(*path_, aside, ec);
    if (ec) std::filesystem::remove(*path_, ec);
    stats_.rebuilt = true;
    return;
  }
  for (auto& r : records) {
    if (r.engine_version != kEngineVersion) {
      ++stats_.foreign_records;
      continue;
    }
    auto [it, inserted] = index_.emplace(std::make_pair(r.lattice_id, r.index_key), r.count);
    if (!inserted) {
      if (it->second != r.count) {
        // Conflicting duplicates cannot both be right; trust neither.
        std::cerr << "siegelwb: warning: conflicting cache records for " << r.lattice_id << ' '
                  << r.index_key << "; dropping both\n";
        index_.erase(it);
        --stats_.records;
        --stats_.per_lattice[r.lattice_id];
      }
      continue;
    }
    ++stats_.records;
    ++stats_.per_lattice[r.lattice_id];
  }
}

std::optional<Integer> CountCache::get(const std::string& lattice_id, const std::string& index_key) const {
  std::lock_guard lock(mutex_);
  if (auto it = index_.find({lattice_id, index_key}); it != index_.end()) return it->second;
  return std::nullopt;
}

void CountCache::put(const CacheRecord& record) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = index_.emplace(std::make_pair(record.lattice_id, record.index_key), record.count);
  if (!inserted) return;
  ++stats_.records;
  ++stats_.per_lattice[record.lattice_id];
  if (!path_) return;
  const std::string line = serialize_record(record) + "\n";
  FileLock file(*path_, LOCK_EX);
  std::size_t written = 0;
  while (written < line.size()) {
    const auto n = ::write(file.fd(), line.data() + written, line.size() - written);
    if (n < 0) fail(ErrorCode::io_error, "cannot append to cache file " + path_->string());
    written += static_cast<std::size_t>(n);
  }
}

CacheFileStats CountCache::file_stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

std::size_t CountCache::size() const {
  std::lock_guard lock(mutex_);
  return index_.size();
}

}  // namespace siegelwb
