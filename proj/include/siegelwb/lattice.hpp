// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_LATTICE_HPP
#define SIEGELWB_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "siegelwb/sym_matrix.hpp"

namespace siegelwb {

/// A positive definite even unimodular lattice given by the Gram matrix of a
/// Z-basis. Immutable once constructed.
class Lattice {
 public:
  /// Validates symmetry, positive definiteness, even diagonal and det = 1.
  Lattice(std::string name, SymMatrix gram);

  const std::string& name() const noexcept { return name_; }
  int rank() const noexcept { return gram_.dim(); }
  const SymMatrix& gram() const noexcept { return gram_; }

  std::int64_t inner(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const;
  std::int64_t norm(std::span<const std::int64_t> x) const { return inner(x, x); }

 private:
  std::string name_;
  SymMatrix gram_;
};

struct LatticeVector {
  std::vector<std::int64_t> coords;  ///< coefficients in the Gram basis
  std::int64_t norm = 0;

  bool operator==(const LatticeVector&) const = default;
};

/// Supported lattice identifiers: "E8", "D16plus", "E8x2" (E8 + E8).
Lattice build_lattice(const std::string& name);
Lattice direct_sum(const Lattice& first, const Lattice& second);
std::vector<std::string> supported_lattices();

/// Every vector of norm <= max_norm (including 0), each once, sorted by
/// (norm, lexicographic coords). max_norm must be even and >= 0.
std::vector<LatticeVector> enumerate_vectors(const Lattice& lattice, std::int64_t max_norm);

/// Number of vectors of each norm 0, 2, ..., max_norm without materializing
/// them; entry k holds the count for norm 2k.
std::vector<std::uint64_t> count_vectors_by_norm(const Lattice& lattice, std::int64_t max_norm);

/// Calls `visit(coords, norm)` for every vector of norm <= max_norm, in
/// enumeration-tree order. The span is only valid during the call.
void visit_vectors(const Lattice& lattice, std::int64_t max_norm,
                   const std::function<void(std::span<const std::int64_t>, std::int64_t)>& visit);

}  // namespace siegelwb

#endif  // SIEGELWB_LATTICE_HPP
