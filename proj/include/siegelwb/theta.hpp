// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_THETA_HPP
#define SIEGELWB_THETA_HPP

#include <cstdint>

#include "siegelwb/expansion.hpp"
#include "siegelwb/lattice.hpp"
#include "siegelwb/representation.hpp"
#include "siegelwb/siegel_point.hpp"

namespace siegelwb {

/// Genus-g theta series of the counter's lattice, truncated at max_trace:
/// a(S) = representation count of S; weight rank/2.
FourierExpansion theta_expansion(RepresentationCounter& counter, int genus, std::int64_t max_trace);

struct DirectThetaValue {
  Complex value;
  /// Heuristic: #tuples on the outermost kept shell (total norm == budget)
  /// times exp(-pi lambda_min (budget + 2)).
  double tail_estimate = 0.0;
  std::uint64_t tuples = 0;
};

/// Direct lattice sum over tuples with sum_p Q(x_p, x_p) <= norm_budget of
/// exp(pi i sum_pq Q(x_p, x_q) tau_pq). Never consults a FourierExpansion.
DirectThetaValue theta_eval(const Lattice& lattice, int genus, const SiegelPoint& point,
                            std::int64_t norm_budget);

}  // namespace siegelwb

#endif  // SIEGELWB_THETA_HPP
