// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_SYM_MATRIX_HPP
#define SIEGELWB_SYM_MATRIX_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "siegelwb/integer.hpp"

namespace siegelwb {

/// Small symmetric integer matrix, stored as the upper triangle in row-major
/// order: (0,0),(0,1),...,(0,g-1),(1,1),...,(g-1,g-1).
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim);

  /// Builds from a full square matrix; throws invalid_argument when the rows
  /// are ragged or the matrix is not symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static SymMatrix from_upper(int dim, std::span<const std::int64_t> upper);
  static SymMatrix zero(int dim) { return SymMatrix(dim); }

  int dim() const noexcept { return dim_; }
  std::int64_t operator()(int p, int q) const noexcept { return upper_[offset(p, q)]; }
  void set(int p, int q, std::int64_t value) noexcept { upper_[offset(p, q)] = value; }

  const std::vector<std::int64_t>& upper() const noexcept { return upper_; }
  std::vector<std::vector<std::int64_t>> rows() const;

  std::int64_t trace() const noexcept;
  std::vector<std::int64_t> diagonal() const;
  bool has_even_diagonal() const noexcept;

  /// Exact determinant (fraction-free elimination).
  Integer determinant() const;
  /// Exact positive semi-definiteness test, fraction-free symmetric elimination.
  bool is_positive_semidefinite() const;
  bool is_positive_definite() const;

  /// Direct sum with `other` placed in the lower-right block.
  SymMatrix direct_sum(const SymMatrix& other) const;
  /// Principal submatrix on the leading `k` rows and columns.
  SymMatrix leading_block(int k) const;
  /// Principal submatrix with row and column `p` removed.
  SymMatrix remove_index(int p) const;
  /// U^T * this * U for a square integer matrix U (row-major, dim x dim).
  SymMatrix congruent(const std::vector<std::int64_t>& u) const;

  /// "g=<dim>;a,b,c,..." with the upper triangle row-major.
  std::string key() const;
  static SymMatrix from_key(const std::string& key);

  /// Order: trace, then diagonal, then off-diagonal entries, all ascending.
  std::strong_ordering operator<=>(const SymMatrix& other) const;
  bool operator==(const SymMatrix& other) const = default;

 private:
  std::size_t offset(int p, int q) const noexcept {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(p) * dim_ - static_cast<std::size_t>(p) * (p - 1) / 2 + (q - p);
  }

  int dim_ = 0;
  std::vector<std::int64_t> upper_;
};

/// Fourier index of a Siegel form and Gram target of a representation count
/// share one representation.
using IndexMatrix = SymMatrix;
using GramTarget = SymMatrix;

/// Validates the index/target invariants: even non-negative diagonal,
/// symmetric, positive semi-definite, dim >= 1.
bool is_valid_index(const SymMatrix& s);
void require_valid_index(const SymMatrix& s, const char* what);

}  // namespace siegelwb

#endif  // SIEGELWB_SYM_MATRIX_HPP
