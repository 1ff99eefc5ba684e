// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_JSON_IO_HPP
#define SIEGELWB_JSON_IO_HPP

#include <json.hpp>

#include "siegelwb/evaluation.hpp"
#include "siegelwb/expansion.hpp"
#include "siegelwb/fay.hpp"
#include "siegelwb/schottky.hpp"

namespace siegelwb {

using Json = nlohmann::ordered_json;

inline constexpr int kExpansionFormatVersion = 1;

/// {"format":"siegelwb.expansion","version":1,"genus","weight","max_trace",
///  "entries":[{"S":[upper triangle],"a":"decimal"}]}; entries in index order.
Json expansion_to_json(const FourierExpansion& f);
FourierExpansion expansion_from_json(const Json& doc);

Json index_to_json(const IndexMatrix& s);
IndexMatrix index_from_json(const Json& doc, int genus);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& doc);
Json matrix_to_json(const ComplexSymMatrix& m);

Json vanishing_report_to_json(const VanishingReport& report);
Json limit_report_to_json(const LimitReport& report);
Json derivative_report_to_json(const DerivativeIdentityReport& report);
Json scaling_report_to_json(const ScalingLawReport& report);

/// {"genus", "tau": g x g of [re,im], "v_a","v_b","aj","s": [[re,im],...],
///  "c1","c2","lambda","mu": [re,im]}; s, c1, c2, lambda, mu optional.
DegenerationData degeneration_from_json(const Json& doc);
Json degeneration_to_json(const DegenerationData& data);

}  // namespace siegelwb

#endif  // SIEGELWB_JSON_IO_HPP
