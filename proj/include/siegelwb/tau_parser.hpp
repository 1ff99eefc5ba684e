// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_TAU_PARSER_HPP
#define SIEGELWB_TAU_PARSER_HPP

#include <string>

#include "siegelwb/siegel_point.hpp"

namespace siegelwb {

/// complex ::= real | [real] "i" | real ("+"|"-") [real] "i"
/// e.g. "2", "i", "-i", "1.2i", "0.3+1.2i", "1e-3-2i". Whitespace ignored.
Complex parse_complex(const std::string& text);

/// tau ::= complex                      (complex * identity of size genus)
///       | "[" row { "," row } "]"       (explicit genus x genus matrix)
/// row ::= "[" entry { "," entry } "]"
/// entry ::= number | "[" number "," number "]" | '"' complex '"'
/// Matrix form is JSON. Throws parse_error, or invalid_argument on a size
/// mismatch or asymmetry.
ComplexSymMatrix parse_tau(const std::string& text, int genus);

}  // namespace siegelwb

#endif  // SIEGELWB_TAU_PARSER_HPP
