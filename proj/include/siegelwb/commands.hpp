// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_COMMANDS_HPP
#define SIEGELWB_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "siegelwb/json_io.hpp"
#include "siegelwb/workbench.hpp"

namespace siegelwb::commands {

/// Each command returns its JSON document and whether its verification
/// passed (always true for pure computations).
struct Outcome {
  Json document;
  bool passed = true;
};

Outcome lattice_enum(Workbench& wb, const std::string& lattice, std::int64_t max_norm,
                     bool include_vectors);
Outcome theta_coeffs(Workbench& wb, const std::string& lattice, int genus, std::int64_t max_trace);
Outcome siegel_phi(const Json& expansion);
Outcome schottky_verify(Workbench& wb, int genus, std::int64_t max_trace);
/// `direct_budget` < 0 skips the direct lattice-sum cross-check.
Outcome eval(Workbench& wb, const std::string& form, int genus, const std::string& tau,
             std::int64_t max_trace, std::int64_t direct_budget);
/// Options: form (default "E8x2"), max_trace (default 6), derivative
/// (default "1", genus g+1), tolerance_derivative (1e-6), tolerance_scaling
/// (1e-9), lambda_mu (pairs), step (1e-4), t (sample parameter, 1e-3).
Outcome fay_check(Workbench& wb, const Json& degeneration, const Json& options);
Outcome cache_stats(Workbench& wb);
Outcome session_stats(Workbench& wb);

}  // namespace siegelwb::commands

#endif  // SIEGELWB_COMMANDS_HPP
