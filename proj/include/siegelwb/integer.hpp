// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_INTEGER_HPP
#define SIEGELWB_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace siegelwb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Integer& value) { return value.str(); }

/// Parses an optionally signed decimal integer; throws parse_error otherwise.
Integer parse_integer(const std::string& text);

inline Integer from_u128(unsigned __int128 value) {
  Integer hi = static_cast<unsigned long long>(value >> 64);
  Integer lo = static_cast<unsigned long long>(value);
  return (hi << 64) | lo;
}

}  // namespace siegelwb

#endif  // SIEGELWB_INTEGER_HPP
