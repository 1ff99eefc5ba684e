// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_EVALUATION_HPP
#define SIEGELWB_EVALUATION_HPP

#include <vector>

#include "siegelwb/expansion.hpp"
#include "siegelwb/siegel_point.hpp"

namespace siegelwb {

/// standard: IEEE double. high: 50 significant decimal digits.
enum class Precision { standard, high };

struct Evaluation {
  Complex value;
  /// Heuristic truncation-tail estimate
  ///   exp(-pi * lambda_min(Im tau) * (max_trace + 2)) * #boundary * max|a|,
  /// where boundary indices are those with trace == max_trace. Not a bound.
  double tail_estimate = 0.0;
};

/// sum over stored S of a(S) exp(pi i tr(S tau)).
Evaluation evaluate(const FourierExpansion& f, const SiegelPoint& point,
                    Precision precision = Precision::standard);

/// Same for a derived expansion; the (pi i)^d prefactor is applied when
/// `with_prefactor` is set.
Evaluation evaluate(const DerivedExpansion& f, const SiegelPoint& point, bool with_prefactor = true,
                    Precision precision = Precision::standard);

struct LimitSample {
  double t = 0.0;
  double deviation = 0.0;  ///< |F(tau (+) it) - Phi(F)(tau)|
};

struct LimitReport {
  Complex limit;  ///< evaluate(Phi(F), tau)
  std::vector<LimitSample> samples;
  double tolerance = 0.0;
  bool converging = false;  ///< deviations non-increasing in t
  bool passed = false;      ///< deviation at the largest t below tolerance
};

/// Evaluates F at tau (+) it for increasing t and compares with Phi(F)(tau).
LimitReport siegel_limit_check(const FourierExpansion& f, const SiegelPoint& point,
                               const std::vector<double>& t_values, double tolerance,
                               Precision precision = Precision::high);

}  // namespace siegelwb

#endif  // SIEGELWB_EVALUATION_HPP
