// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_SCHOTTKY_HPP
#define SIEGELWB_SCHOTTKY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "siegelwb/expansion.hpp"
#include "siegelwb/representation.hpp"

namespace siegelwb {

/// F_g = theta_{E8+E8,g} - theta_{D16+,g}, weight 8, no rescaling.
FourierExpansion schottky_expansion(RepresentationCounter& e8x2, RepresentationCounter& d16plus,
                                    int genus, std::int64_t max_trace);

using IndexedCoefficient = std::pair<IndexMatrix, Integer>;

struct VanishingReport {
  int genus = 0;
  std::int64_t max_trace = 0;
  bool passed = false;
  std::size_t indices_checked = 0;
  std::optional<IndexedCoefficient> counterexample;  ///< first nonzero index
  std::vector<IndexedCoefficient> nonzero;
};

/// Checks every index of trace <= max_trace; g must be 1, 2 or 3.
VanishingReport verify_vanishing(RepresentationCounter& e8x2, RepresentationCounter& d16plus,
                                 int genus, std::int64_t max_trace);

/// Scans F_4 in enumeration order; the first index with a nonzero coefficient.
std::optional<IndexedCoefficient> first_nonzero_index(RepresentationCounter& e8x2,
                                                      RepresentationCounter& d16plus,
                                                      std::int64_t max_trace);

/// Nonzero coefficients of an already computed expansion, in index order.
std::vector<IndexedCoefficient> nonzero_coefficients(const FourierExpansion& f);

}  // namespace siegelwb

#endif  // SIEGELWB_SCHOTTKY_HPP
