// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_ERROR_HPP
#define SIEGELWB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace siegelwb {

/// Error categories. Values match the C API status codes in siegelwb.h.
enum class ErrorCode : int {
  invalid_argument = 1,
  unsupported_lattice = 2,
  incompatible_expansion = 3,
  domain_error = 4,
  degenerate_fiber = 5,
  parse_error = 6,
  io_error = 7,
  cache_mismatch = 8,
  internal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace siegelwb

#endif  // SIEGELWB_ERROR_HPP
