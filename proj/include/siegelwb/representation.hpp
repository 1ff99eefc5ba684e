// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_REPRESENTATION_HPP
#define SIEGELWB_REPRESENTATION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "siegelwb/integer.hpp"
#include "siegelwb/lattice.hpp"
#include "siegelwb/sym_matrix.hpp"

namespace siegelwb {

class CountCache;

/// All vectors of one exact norm, flat row-major (size() x rank) in the Gram
/// basis, sorted lexicographically.
struct Shell {
  std::int64_t norm = 0;
  int rank = 0;
  std::vector<std::int16_t> coords;

  std::size_t size() const noexcept { return rank == 0 ? 0 : coords.size() / rank; }
  std::span<const std::int16_t> at(std::size_t i) const noexcept {
    return {coords.data() + i * rank, static_cast<std::size_t>(rank)};
  }
};

/// Lazily enumerated shells of a lattice. Thread-safe; returned references stay
/// valid for the lifetime of the store.
class ShellStore {
 public:
  explicit ShellStore(Lattice lattice);

  const Lattice& lattice() const noexcept { return lattice_; }
  const Shell& shell(std::int64_t norm);
  /// Shell size without materializing vectors when the shell is not cached.
  std::uint64_t shell_size(std::int64_t norm);

 private:
  void materialize_up_to(std::int64_t norm);

  Lattice lattice_;
  std::mutex mutex_;
  std::map<std::int64_t, std::unique_ptr<Shell>> shells_;
  std::vector<std::uint64_t> sizes_;  // index norm/2
};

/// Result of GL_g(Z) reduction of a Gram target. When `vanishes` is true the
/// representation count is 0 (a zero diagonal entry with a nonzero row).
struct ReducedTarget {
  GramTarget form;
  bool vanishes = false;
};

/// Strips zero rows/columns, applies pairwise size reduction
/// x_q <- x_q - k x_p until |2 S_pq| <= S_pp for all p != q, and returns the
/// canonical representative under permutations and sign changes (smallest
/// under SymMatrix ordering, so the diagonal is sorted ascending). A result of
/// dimension 0 stands for the empty tuple (count 1).
ReducedTarget reduce_target(const GramTarget& s);

/// Smallest representative of the orbit of `s` under permutations and sign
/// changes of the basis.
GramTarget canonical_form(const GramTarget& s);

struct CountOptions {
  unsigned threads = 1;
  /// Count through reduce_target (GL reduction + canonical dedup + memo).
  bool dedup = true;
  /// Recompute every 100th cache hit and compare.
  bool verify_cache = false;
};

struct CountStats {
  std::uint64_t calls = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t verified = 0;
};

/// Representation numbers #{(x_1..x_g) in L^g : (x_p, x_q) = S_pq}.
class RepresentationCounter {
 public:
  RepresentationCounter(Lattice lattice, CountOptions options = {},
                        std::shared_ptr<CountCache> cache = nullptr);

  const Lattice& lattice() const noexcept { return shells_.lattice(); }
  const CountOptions& options() const noexcept { return options_; }
  ShellStore& shells() noexcept { return shells_; }

  /// Memoized count; 0 for targets that are not positive semi-definite.
  /// Every call is either a cache hit or a miss.
  Integer count(const GramTarget& s);

  /// Depth-first tuple search on `s` exactly as given: no reduction, no cache.
  Integer count_direct(const GramTarget& s, unsigned threads);

  CountStats stats() const;
  void reset_stats();

 private:
  Integer compute_reduced(const GramTarget& reduced);
  const std::vector<std::uint64_t>& pair_histogram(std::int64_t n1, std::int64_t n2);

  ShellStore shells_;
  CountOptions options_;
  std::shared_ptr<CountCache> cache_;
  mutable std::mutex stats_mutex_;
  CountStats stats_;
  std::mutex histogram_mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::uint64_t>> histograms_;
};

}  // namespace siegelwb

#endif  // SIEGELWB_REPRESENTATION_HPP
