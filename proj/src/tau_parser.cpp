// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/tau_parser.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>

#include "siegelwb/error.hpp"

namespace siegelwb {

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  fail(ErrorCode::parse_error, "cannot parse complex number '" + text + "': " + why);
}

// Longest prefix of s[pos..] that is a real literal (no sign); returns length.
std::size_t real_length(const std::string& s, std::size_t pos) {
  std::size_t i = pos;
  bool digits = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, digits = true;
  }
  if (!digits) return 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    std::size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k > j) i = k;
  }
  return i - pos;
}

// [sign] [real] ["i"] starting at pos; sets is_imag.
double signed_term(const std::string& s, std::size_t& pos, bool& is_imag, const std::string& original) {
  double sign = 1.0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -1.0;
    ++pos;
  }
  const std::size_t len = real_length(s, pos);
  double value = 1.0;
  if (len > 0) {
    const auto res = std::from_chars(s.data() + pos, s.data() + pos + len, value);
    if (res.ec != std::errc()) bad(original, "bad number");
    pos += len;
  }
  is_imag = pos < s.size() && s[pos] == 'i';
  if (is_imag) ++pos;
  if (len == 0 && !is_imag) bad(original, "expected a number or 'i'");
  return sign * value;
}

Complex entry(const nlohmann::json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_string()) return parse_complex(e.get<std::string>());
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  fail(ErrorCode::parse_error, "matrix entry must be a number, [re, im] or a complex string");
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad(text, "empty");
  std::size_t pos = 0;
  bool imag = false;
  const double first = signed_term(s, pos, imag, text);
  if (pos == s.size()) return imag ? Complex(0.0, first) : Complex(first, 0.0);
  if (imag || (s[pos] != '+' && s[pos] != '-')) bad(text, "unexpected trailing characters");
  bool imag2 = false;
  const double second = signed_term(s, pos, imag2, text);
  if (!imag2 || pos != s.size()) bad(text, "second term must be imaginary");
  return {first, second};
}

ComplexSymMatrix parse_tau(const std::string& text, int genus) {
  require(genus >= 1, ErrorCode::invalid_argument, "genus must be at least 1");
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(ErrorCode::parse_error, "empty tau");
  if (text[first] != '[') return ComplexSymMatrix::scalar(genus, parse_complex(text));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("tau matrix is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) fail(ErrorCode::parse_error, "tau matrix must be an array of rows");
  require(static_cast<int>(doc.size()) == genus, ErrorCode::invalid_argument,
          "tau must be " + std::to_string(genus) + " x " + std::to_string(genus));
  std::vector<std::vector<Complex>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) fail(ErrorCode::parse_error, "tau row must be an array");
    require(static_cast<int>(row.size()) == genus, ErrorCode::invalid_argument,
            "tau must be " + std::to_string(genus) + " x " + std::to_string(genus));
    std::vector<Complex> r;
    for (const auto& e : row) r.push_back(entry(e));
    rows.push_back(std::move(r));
  }
  return ComplexSymMatrix::from_rows(rows);
}

}  // namespace siegelwb
