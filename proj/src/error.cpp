// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/error.hpp"

#include <cctype>

#include "siegelwb/integer.hpp"

namespace siegelwb {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::unsupported_lattice: return "unsupported-lattice";
    case ErrorCode::incompatible_expansion: return "incompatible-expansion";
    case ErrorCode::domain_error: return "domain-error";
    case ErrorCode::degenerate_fiber: return "degenerate-fiber";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::cache_mismatch: return "cache-mismatch";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) fail(ErrorCode::parse_error, "empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      fail(ErrorCode::parse_error, "malformed integer literal '" + text + "'");
  }
  Integer value(text.substr(text[0] == '+' ? 1 : 0));
  return value;
}

}  // namespace siegelwb
