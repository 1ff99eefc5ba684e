// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_EXPANSION_HPP
#define SIEGELWB_EXPANSION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siegelwb/integer.hpp"
#include "siegelwb/sym_matrix.hpp"

namespace siegelwb {

/// Truncated Fourier expansion F(T) = sum_S a(S) exp(pi i tr(S T)) of a scalar
/// Siegel form of integer weight. Indices with trace <= max_trace are "known";
/// an absent known index has coefficient 0. Zero coefficients are never stored.
class FourierExpansion {
 public:
  FourierExpansion(int genus, int weight, std::int64_t max_trace);

  int genus() const noexcept { return genus_; }
  int weight() const noexcept { return weight_; }
  std::int64_t max_trace() const noexcept { return max_trace_; }
  const std::map<IndexMatrix, Integer>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient, or nullopt if the index lies beyond the truncation bound.
  std::optional<Integer> coefficient(const IndexMatrix& s) const;
  void set(const IndexMatrix& s, Integer value);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool operator==(const FourierExpansion&) const = default;

 private:
  int genus_;
  int weight_;
  std::int64_t max_trace_;
  std::map<IndexMatrix, Integer> coeffs_;
};

/// Every g x g index (symmetric, even non-negative diagonal, positive
/// semi-definite) with trace <= max_trace, sorted by SymMatrix ordering.
std::vector<IndexMatrix> enumerate_indices(int genus, std::int64_t max_trace);

/// True unless the last diagonal entry is 0 while the last row is not.
bool border_zero_forced(const IndexMatrix& s);

FourierExpansion add(const FourierExpansion& f, const FourierExpansion& g);
FourierExpansion sub(const FourierExpansion& f, const FourierExpansion& g);
FourierExpansion scale(const FourierExpansion& f, const Integer& c);

/// Siegel operator: genus g+1 -> g, a'(S1) = a(S1 (+) 0).
FourierExpansion siegel_operator(const FourierExpansion& f);

/// Homogeneous polynomial with rational coefficients in the symmetric
/// variables x_pq (p <= q), standing for the differential operator
/// N({d/dT_pq}).
class DerivativePolynomial {
 public:
  /// Exponent vector over the variables in upper-triangle row-major order.
  using Monomial = std::vector<int>;

  explicit DerivativePolynomial(int genus);

  static DerivativePolynomial constant(int genus, const Rational& c);
  /// The variable x_pq with 1-based p, q.
  static DerivativePolynomial variable(int genus, int p, int q);
  /// Grammar: sum of terms `[coef *] factor {* factor}`, factor `x<p><q>`
  /// (single digits) or `x(p,q)`, optional `^n`; coef an integer or a/b.
  static DerivativePolynomial parse(const std::string& text, int genus);

  int genus() const noexcept { return genus_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Rational evaluate(const IndexMatrix& x) const;
  /// N_g from N_{g+1}: every variable in the last row/column set to 0.
  DerivativePolynomial restrict_to_leading(int genus) const;

  DerivativePolynomial operator+(const DerivativePolynomial& other) const;
  DerivativePolynomial operator*(const DerivativePolynomial& other) const;
  DerivativePolynomial operator*(const Rational& c) const;

  std::string to_string() const;
  bool operator==(const DerivativePolynomial&) const = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  int genus_;
  std::map<Monomial, Rational> terms_;
};

/// Expansion with coefficients a(X) N({x_pq}) and a symbolic prefactor
/// (pi i)^prefactor_degree, applied only at numeric evaluation.
struct DerivedExpansion {
  int genus = 0;
  int weight = 0;
  std::int64_t max_trace = 0;
  int prefactor_degree = 0;
  std::map<IndexMatrix, Rational> coefficients;
};

DerivedExpansion apply_derivative(const FourierExpansion& f, const DerivativePolynomial& n);
DerivedExpansion as_derived(const FourierExpansion& f);

}  // namespace siegelwb

#endif  // SIEGELWB_EXPANSION_HPP
