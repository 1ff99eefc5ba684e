// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/expansion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "siegelwb/error.hpp"

namespace siegelwb {

FourierExpansion::FourierExpansion(int genus, int weight, std::int64_t max_trace)
    : genus_(genus), weight_(weight), max_trace_(max_trace) {
  require(genus >= 1, ErrorCode::invalid_argument, "genus must be at least 1");
  require(weight >= 0, ErrorCode::invalid_argument, "weight must be non-negative");
  require(max_trace >= 0 && max_trace % 2 == 0, ErrorCode::invalid_argument,
          "max_trace must be even and non-negative");
}

std::optional<Integer> FourierExpansion::coefficient(const IndexMatrix& s) const {
  require(s.dim() == genus_, ErrorCode::invalid_argument,
          "index genus " + std::to_string(s.dim()) + " does not match expansion genus " +
              std::to_string(genus_));
  if (s.trace() > max_trace_) return std::nullopt;
  if (auto it = coeffs_.find(s); it != coeffs_.end()) return it->second;
  return Integer(0);
}

void FourierExpansion::set(const IndexMatrix& s, Integer value) {
  require(s.dim() == genus_, ErrorCode::invalid_argument, "index genus does not match expansion");
  require_valid_index(s, "Fourier index");
  require(s.trace() <= max_trace_, ErrorCode::invalid_argument,
          "index " + s.key() + " lies beyond the truncation bound");
  if (value == 0)
    coeffs_.erase(s);
  else
    coeffs_[s] = std::move(value);
}

// ---------------------------------------------------------------------------

namespace {

// Off-diagonal entries are filled column by column: (0,1), (0,2), (1,2), ...
// Once column q is complete the leading (q+1)-block is final and must be psd.
void fill_off_diagonal(const std::vector<std::int64_t>& diag, IndexMatrix& m, int p, int q,
                       std::vector<IndexMatrix>& out) {
  const int g = static_cast<int>(diag.size());
  if (q >= g) {
    out.push_back(m);
    return;
  }
  const int np = p + 1 < q ? p + 1 : 0;
  const int nq = p + 1 < q ? q : q + 1;
  const auto bound = static_cast<std::int64_t>(
      std::floor(std::sqrt(static_cast<double>(diag[p] * diag[q])) + 1e-9));
  for (std::int64_t v = -bound; v <= bound; ++v) {
    m.set(p, q, v);
    if (p + 1 == q && !m.leading_block(q + 1).is_positive_semidefinite()) continue;
    fill_off_diagonal(diag, m, np, nq, out);
  }
  m.set(p, q, 0);
}

void fill_diagonal(int genus, std::int64_t budget, std::vector<std::int64_t>& diag,
                   std::vector<IndexMatrix>& out) {
  if (static_cast<int>(diag.size()) == genus) {
    IndexMatrix m(genus);
    for (int p = 0; p < genus; ++p) m.set(p, p, diag[p]);
    if (genus == 1) {
      out.push_back(m);
      return;
    }
    fill_off_diagonal(diag, m, 0, 1, out);
    return;
  }
  for (std::int64_t d = 0; d <= budget; d += 2) {
    diag.push_back(d);
    fill_diagonal(genus, budget - d, diag, out);
    diag.pop_back();
  }
}

}  // namespace

std::vector<IndexMatrix> enumerate_indices(int genus, std::int64_t max_trace) {
  require(genus >= 1, ErrorCode::invalid_argument, "genus must be at least 1");
  require(max_trace >= 0 && max_trace % 2 == 0, ErrorCode::invalid_argument,
          "max_trace must be even and non-negative");
  std::vector<IndexMatrix> out;
  std::vector<std::int64_t> diag;
  fill_diagonal(genus, max_trace, diag, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool border_zero_forced(const IndexMatrix& s) {
  const int last = s.dim() - 1;
  if (last < 0 || s(last, last) != 0) return true;
  for (int p = 0; p < last; ++p)
    if (s(p, last) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void require_compatible(const FourierExpansion& f, const FourierExpansion& g) {
  require(f.genus() == g.genus() && f.weight() == g.weight(), ErrorCode::incompatible_expansion,
          "expansions differ in genus or weight (" + std::to_string(f.genus()) + "/" +
              std::to_string(f.weight()) + " vs " + std::to_string(g.genus()) + "/" +
              std::to_string(g.weight()) + ")");
}

FourierExpansion combine(const FourierExpansion& f, const FourierExpansion& g, int sign) {
  require_compatible(f, g);
  const auto bound = std::min(f.max_trace(), g.max_trace());
  FourierExpansion out(f.genus(), f.weight(), bound);
  std::map<IndexMatrix, Integer> acc;
  for (const auto& [s, a] : f.coefficients())
    if (s.trace() <= bound) acc[s] += a;
  for (const auto& [s, a] : g.coefficients())
    if (s.trace() <= bound) acc[s] += sign * a;
  for (auto& [s, a] : acc) out.set(s, std::move(a));
  return out;
}

}  // namespace

FourierExpansion add(const FourierExpansion& f, const FourierExpansion& g) { return combine(f, g, 1); }
FourierExpansion sub(const FourierExpansion& f, const FourierExpansion& g) { return combine(f, g, -1); }

FourierExpansion scale(const FourierExpansion& f, const Integer& c) {
  FourierExpansion out(f.genus(), f.weight(), f.max_trace());
  if (c == 0) return out;
  for (const auto& [s, a] : f.coefficients()) out.set(s, a * c);
  return out;
}

FourierExpansion siegel_operator(const FourierExpansion& f) {
  require(f.genus() >= 2, ErrorCode::invalid_argument, "the Siegel operator needs genus >= 2");
  const int g = f.genus() - 1;
  FourierExpansion out(g, f.weight(), f.max_trace());
  for (const auto& [s, a] : f.coefficients()) {
    if (s(g, g) != 0) continue;
    require(border_zero_forced(s), ErrorCode::internal, "stored index violates semi-positivity");
    out.set(s.leading_block(g), a);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

int variable_count(int genus) { return genus * (genus + 1) / 2; }

int variable_slot(int genus, int p, int q) {
  if (p > q) std::swap(p, q);
  return p * genus - p * (p - 1) / 2 + (q - p);
}

class PolyParser {
 public:
  PolyParser(const std::string& text, int genus) : genus_(genus) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  DerivativePolynomial parse() {
    DerivativePolynomial result(genus_);
    if (s_.empty()) error("empty polynomial");
    bool first = true;
    while (pos_ < s_.size() || first) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      result = result + term() * sign;
      first = false;
    }
    return result;
  }

 private:
  DerivativePolynomial term() {
    DerivativePolynomial t = factor();
    while (peek() == '*') {
      get();
      t = t * factor();
    }
    return t;
  }

  DerivativePolynomial factor() {
    if (peek() == 'x') {
      get();
      int p = 0;
      int q = 0;
      if (peek() == '(') {
        get();
        p = integer();
        expect(',');
        q = integer();
        expect(')');
      } else {
        p = digit();
        q = digit();
      }
      if (p < 1 || q < 1 || p > genus_ || q > genus_)
        error("variable x(" + std::to_string(p) + "," + std::to_string(q) + ") outside genus " +
              std::to_string(genus_));
      DerivativePolynomial v = DerivativePolynomial::variable(genus_, p, q);
      if (peek() == '^') {
        get();
        const int e = integer();
        DerivativePolynomial pw = DerivativePolynomial::constant(genus_, 1);
        for (int k = 0; k < e; ++k) pw = pw * v;
        return pw;
      }
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c = integer();
      if (peek() == '/') {
        get();
        const int d = integer();
        if (d == 0) error("zero denominator");
        c /= d;
      }
      return DerivativePolynomial::constant(genus_, c);
    }
    error("unexpected character");
  }

  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1000000) error("integer too large");
    }
    return static_cast<int>(v);
  }
  int digit() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected variable digit");
    return get() - '0';
  }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    get();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse_error,
         "derivative polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }

  int genus_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

DerivativePolynomial::DerivativePolynomial(int genus) : genus_(genus) {
  require(genus >= 1, ErrorCode::invalid_argument, "genus must be at least 1");
}

DerivativePolynomial DerivativePolynomial::constant(int genus, const Rational& c) {
  DerivativePolynomial n(genus);
  n.add_term(Monomial(variable_count(genus), 0), c);
  return n;
}

DerivativePolynomial DerivativePolynomial::variable(int genus, int p, int q) {
  require(p >= 1 && q >= 1 && p <= genus && q <= genus, ErrorCode::invalid_argument,
          "variable index outside genus");
  DerivativePolynomial n(genus);
  Monomial m(variable_count(genus), 0);
  m[variable_slot(genus, p - 1, q - 1)] = 1;
  n.add_term(m, 1);
  return n;
}

DerivativePolynomial DerivativePolynomial::parse(const std::string& text, int genus) {
  return PolyParser(text, genus).parse();
}

void DerivativePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
}

int DerivativePolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int sum = 0;
    for (int e : m) sum += e;
    d = std::max(d, sum);
  }
  return d;
}

bool DerivativePolynomial::is_homogeneous() const {
  const int d = degree();
  for (const auto& [m, c] : terms_) {
    int sum = 0;
    for (int e : m) sum += e;
    if (sum != d) return false;
  }
  return true;
}

Rational DerivativePolynomial::evaluate(const IndexMatrix& x) const {
  require(x.dim() == genus_, ErrorCode::invalid_argument, "matrix genus does not match polynomial");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Integer prod = 1;
    for (int p = 0; p < genus_; ++p)
      for (int q = p; q < genus_; ++q) {
        const int e = m[variable_slot(genus_, p, q)];
        for (int k = 0; k < e; ++k) prod *= x(p, q);
      }
    total += c * prod;
  }
  return total;
}

DerivativePolynomial DerivativePolynomial::restrict_to_leading(int genus) const {
  require(genus >= 1 && genus <= genus_, ErrorCode::invalid_argument, "restriction genus out of range");
  DerivativePolynomial out(genus);
  for (const auto& [m, c] : terms_) {
    bool keep = true;
    Monomial r(variable_count(genus), 0);
    for (int p = 0; p < genus_ && keep; ++p)
      for (int q = p; q < genus_; ++q) {
        const int e = m[variable_slot(genus_, p, q)];
        if (e == 0) continue;
        if (q >= genus) {
          keep = false;
          break;
        }
        r[variable_slot(genus, p, q)] = e;
      }
    if (keep) out.add_term(r, c);
  }
  return out;
}

DerivativePolynomial DerivativePolynomial::operator+(const DerivativePolynomial& other) const {
  require(genus_ == other.genus_, ErrorCode::invalid_argument, "polynomial genus mismatch");
  DerivativePolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

DerivativePolynomial DerivativePolynomial::operator*(const DerivativePolynomial& other) const {
  require(genus_ == other.genus_, ErrorCode::invalid_argument, "polynomial genus mismatch");
  DerivativePolynomial out(genus_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) {
      Monomial m(m1.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      out.add_term(m, c1 * c2);
    }
  return out;
}

DerivativePolynomial DerivativePolynomial::operator*(const Rational& c) const {
  DerivativePolynomial out(genus_);
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

std::string DerivativePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational coef = c;
    if (!first) out << (coef < 0 ? " - " : " + ");
    else if (coef < 0) out << '-';
    if (coef < 0) coef = -coef;
    bool any_var = false;
    std::ostringstream vars;
    for (int p = 0; p < genus_; ++p)
      for (int q = p; q < genus_; ++q) {
        const int e = m[variable_slot(genus_, p, q)];
        if (e == 0) continue;
        if (any_var) vars << '*';
        vars << "x(" << p + 1 << ',' << q + 1 << ')';
        if (e > 1) vars << '^' << e;
        any_var = true;
      }
    if (!any_var || coef != 1) {
      out << coef.str();
      if (any_var) out << '*';
    }
    out << vars.str();
    first = false;
  }
  return out.str();
}

DerivedExpansion apply_derivative(const FourierExpansion& f, const DerivativePolynomial& n) {
  require(n.genus() == f.genus(), ErrorCode::incompatible_expansion,
          "derivative polynomial genus " + std::to_string(n.genus()) +
              " does not match expansion genus " + std::to_string(f.genus()));
  require(n.is_homogeneous(), ErrorCode::invalid_argument,
          "derivative polynomial must be homogeneous: " + n.to_string());
  DerivedExpansion out;
  out.genus = f.genus();
  out.weight = f.weight();
  out.max_trace = f.max_trace();
  out.prefactor_degree = std::max(0, n.degree());
  for (const auto& [s, a] : f.coefficients()) {
    Rational v = n.evaluate(s) * a;
    if (v != 0) out.coefficients.emplace(s, std::move(v));
  }
  return out;
}

DerivedExpansion as_derived(const FourierExpansion& f) {
  return apply_derivative(f, DerivativePolynomial::constant(f.genus(), 1));
}

}  // namespace siegelwb
