// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/fay.hpp"

#include <algorithm>
#include <cmath>

#include "numeric.hpp"
#include "siegelwb/error.hpp"

namespace siegelwb {

namespace {

using detail::Cx;
using detail::HighReal;

constexpr double kVanishing = 1e-300;

void require_length(const ComplexVector& v, int g, const char* what) {
  require(static_cast<int>(v.size()) == g, ErrorCode::invalid_argument,
          std::string(what) + " must have length " + std::to_string(g));
}

void require_genus(int expected, int actual, const char* what) {
  require(expected == actual, ErrorCode::incompatible_expansion,
          std::string(what) + " genus " + std::to_string(actual) + ", expected " + std::to_string(expected));
}

template <class Real>
Cx<Real> sum_A(const FourierExpansion& f, const DerivativePolynomial& n, const SiegelPoint& tau,
               const ComplexSymMatrix& sigma) {
  const Cx<Real> pi_i(Real(0), detail::pi<Real>());
  return detail::exp_sum<Real>(f.coefficients(), tau.tau(), [&](const IndexMatrix& s, const Integer& a) {
    const Rational w = n.evaluate(s) * Rational(a);
    return pi_i * detail::trace_product<Real>(s, sigma) * detail::to_real<Real>(w);
  });
}

template <class Real>
Cx<Real> sum_B(const FourierExpansion& f_next, const DerivativePolynomial& n_next, const SiegelPoint& tau,
               const ComplexVector& aj) {
  const int g = tau.genus();
  Cx<Real> acc;
  for (const auto& [x, a] : f_next.coefficients()) {
    if (x(g, g) != 2) continue;
    const Rational w = n_next.evaluate(x) * Rational(a);
    if (w == 0) continue;
    // exp(2 pi i sum_p x_{p,g} aj_p) = exp(pi i z) with z = 2 sum_p x_{p,g} aj_p
    Cx<Real> border;
    for (int p = 0; p < g; ++p) border += Cx<Real>(aj[p]) * Real(2 * x(p, g));
    const IndexMatrix lead = x.leading_block(g);
    acc += detail::exp_pi_i(border) * detail::exp_pi_i(detail::trace_product<Real>(lead, tau.tau())) *
           detail::to_real<Real>(w);
  }
  return acc;
}

/// t -> sum a N exp(pi i tr(S (tau + t sigma))), no (pi i)^d prefactor.
template <class Real>
Complex shifted_sum(const DerivedExpansion& d, const SiegelPoint& tau, const ComplexSymMatrix& sigma,
                    double t) {
  const ComplexSymMatrix shifted = tau.tau() + sigma * Complex(t, 0.0);
  return detail::exp_sum<Real>(d.coefficients, shifted, [](const IndexMatrix&, const Rational& w) {
           return Cx<Real>(detail::to_real<Real>(w), Real(0));
         })
      .to_complex();
}

double relative(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale < kVanishing ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

void DegenerationData::validate() const {
  const int g = genus();
  require_length(v_a, g, "v_a");
  require_length(v_b, g, "v_b");
  require_length(aj, g, "aj");
  require(s.empty() || static_cast<int>(s.size()) == g, ErrorCode::invalid_argument,
          "s must be empty or have length " + std::to_string(g));
  require(lambda != Complex(0, 0) && mu != Complex(0, 0), ErrorCode::invalid_argument,
          "lambda and mu must be nonzero");
}

ComplexSymMatrix sigma_matrix(const ComplexVector& v_a, const ComplexVector& v_b) {
  require(!v_a.empty() && v_a.size() == v_b.size(), ErrorCode::invalid_argument,
          "v_a and v_b must be nonempty and of equal length");
  const int g = static_cast<int>(v_a.size());
  const Complex two_pi_i(0.0, 2.0 * M_PI);
  ComplexSymMatrix sigma(g);
  for (int p = 0; p < g; ++p)
    for (int q = p; q < g; ++q) sigma.set(p, q, two_pi_i * (v_a[p] * v_b[q] + v_a[q] * v_b[p]));
  return sigma;
}

ComplexSymMatrix period_matrix_first_order(const DegenerationData& data, Complex t) {
  data.validate();
  if (t == Complex(0, 0)) fail(ErrorCode::degenerate_fiber, "t = 0: the corner entry diverges");
  require(std::abs(t) < 1.0, ErrorCode::invalid_argument, "|t| must be below 1");
  const int g = data.genus();
  ComplexVector va(g), vb(g);
  for (int p = 0; p < g; ++p) {
    va[p] = data.lambda * data.v_a[p];
    vb[p] = data.mu * data.v_b[p];
  }
  const ComplexSymMatrix sigma = sigma_matrix(va, vb);
  ComplexSymMatrix out(g + 1);
  for (int p = 0; p < g; ++p) {
    for (int q = p; q < g; ++q) out.set(p, q, data.tau.tau()(p, q) + t * sigma(p, q));
    const Complex sp = data.s.empty() ? Complex(0, 0) : data.s[p];
    out.set(p, g, data.aj[p] + t * sp);
  }
  out.set(g, g, (std::log(t) + data.c1 + data.c2 * t) / Complex(0.0, 2.0 * M_PI));
  return out;
}

Complex coefficient_A(const FourierExpansion& f, const DerivativePolynomial& n, const SiegelPoint& tau,
                      const ComplexSymMatrix& sigma, Precision precision) {
  require_genus(f.genus(), tau.genus(), "point");
  require_genus(f.genus(), n.genus(), "derivative polynomial");
  require_genus(f.genus(), sigma.dim(), "sigma");
  return precision == Precision::high ? sum_A<HighReal>(f, n, tau, sigma).to_complex()
                                      : sum_A<double>(f, n, tau, sigma).to_complex();
}

Complex coefficient_B(const FourierExpansion& f_next, const DerivativePolynomial& n_next,
                      const SiegelPoint& tau, const ComplexVector& aj, Precision precision) {
  require_genus(tau.genus() + 1, f_next.genus(), "expansion");
  require_genus(f_next.genus(), n_next.genus(), "derivative polynomial");
  require_length(aj, tau.genus(), "aj");
  return precision == Precision::high ? sum_B<HighReal>(f_next, n_next, tau, aj).to_complex()
                                      : sum_B<double>(f_next, n_next, tau, aj).to_complex();
}

DerivativeIdentityReport derivative_identity_check(const FourierExpansion& f, const DerivativePolynomial& n,
                                                   const SiegelPoint& tau, const ComplexSymMatrix& sigma,
                                                   double tolerance, double step, Precision precision) {
  require(step > 0.0, ErrorCode::invalid_argument, "step must be positive");
  DerivativeIdentityReport report;
  report.tolerance = tolerance;
  report.direct = coefficient_A(f, n, tau, sigma, precision);

  DerivedExpansion d = apply_derivative(f, n);
  auto central = [&](double h) {
    const Complex plus = precision == Precision::high ? shifted_sum<HighReal>(d, tau, sigma, h)
                                                      : shifted_sum<double>(d, tau, sigma, h);
    const Complex minus = precision == Precision::high ? shifted_sum<HighReal>(d, tau, sigma, -h)
                                                       : shifted_sum<double>(d, tau, sigma, -h);
    return (plus - minus) / (2.0 * h);
  };
  const Complex coarse = central(step);
  const Complex fine = central(step / 2.0);
  report.finite_difference = (4.0 * fine - coarse) / 3.0;

  report.abs_discrepancy = std::abs(report.direct - report.finite_difference);
  report.rel_discrepancy = relative(report.direct, report.finite_difference);
  if (std::max(std::abs(report.direct), std::abs(report.finite_difference)) < kVanishing)
    report.abs_discrepancy = 0.0;
  report.passed = report.rel_discrepancy <= tolerance;
  return report;
}

ScalingLawReport scaling_law_check(const FourierExpansion& f, const DerivativePolynomial& n,
                                   const SiegelPoint& tau, const ComplexVector& v_a, const ComplexVector& v_b,
                                   const std::vector<std::pair<Complex, Complex>>& pairs, double tolerance) {
  require(!pairs.empty(), ErrorCode::invalid_argument, "at least one (lambda, mu) pair is needed");
  ScalingLawReport report;
  report.tolerance = tolerance;
  for (const auto& [lambda, mu] : pairs) {
    require(lambda != Complex(0, 0) && mu != Complex(0, 0), ErrorCode::invalid_argument,
            "lambda and mu must be nonzero");
    ComplexVector va(v_a.size()), vb(v_b.size());
    for (std::size_t p = 0; p < v_a.size(); ++p) va[p] = lambda * v_a[p];
    for (std::size_t p = 0; p < v_b.size(); ++p) vb[p] = mu * v_b[p];
    ScalingSample sample{lambda, mu, Complex(0, 0), Complex(0, 0)};
    sample.a = coefficient_A(f, n, tau, sigma_matrix(va, vb));
    sample.ratio = sample.a / (lambda * mu);
    report.samples.push_back(sample);
  }
  report.d = report.samples.front().ratio;
  for (const auto& s : report.samples)
    report.max_rel_spread = std::max(report.max_rel_spread, relative(s.ratio, report.d));
  report.passed = report.max_rel_spread <= tolerance;
  return report;
}

}  // namespace siegelwb
