// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "numeric.hpp"
#include "siegelwb/error.hpp"

namespace siegelwb {

namespace {

using detail::Cx;
using detail::HighReal;

template <class Map>
double tail_estimate(const Map& coefficients, std::int64_t max_trace, double lambda_min) {
  std::size_t boundary = 0;
  double max_abs = 0.0;
  for (const auto& [s, a] : coefficients) {
    max_abs = std::max(max_abs, std::abs(a.template convert_to<double>()));
    if (s.trace() == max_trace) ++boundary;
  }
  return std::exp(-M_PI * lambda_min * static_cast<double>(max_trace + 2)) *
         static_cast<double>(boundary) * max_abs;
}

template <class Real>
Cx<Real> sum_integer(const FourierExpansion& f, const SiegelPoint& point) {
  return detail::exp_sum<Real>(f.coefficients(), point.tau(), [](const IndexMatrix&, const Integer& a) {
    return Cx<Real>(detail::to_real<Real>(a), Real(0));
  });
}

template <class Real>
Cx<Real> sum_rational(const DerivedExpansion& f, const SiegelPoint& point, bool with_prefactor) {
  auto acc = detail::exp_sum<Real>(f.coefficients, point.tau(), [](const IndexMatrix&, const Rational& a) {
    return Cx<Real>(detail::to_real<Real>(a), Real(0));
  });
  if (with_prefactor) acc = acc * detail::pi_i_power<Real>(f.prefactor_degree);
  return acc;
}

void require_genus(int expansion, int point) {
  require(expansion == point, ErrorCode::incompatible_expansion,
          "point genus " + std::to_string(point) + " does not match expansion genus " +
              std::to_string(expansion));
}

}  // namespace

Evaluation evaluate(const FourierExpansion& f, const SiegelPoint& point, Precision precision) {
  require_genus(f.genus(), point.genus());
  Evaluation e;
  e.value = precision == Precision::high ? sum_integer<HighReal>(f, point).to_complex()
                                         : sum_integer<double>(f, point).to_complex();
  e.tail_estimate = tail_estimate(f.coefficients(), f.max_trace(), point.min_imag_eigenvalue());
  return e;
}

Evaluation evaluate(const DerivedExpansion& f, const SiegelPoint& point, bool with_prefactor,
                    Precision precision) {
  require_genus(f.genus, point.genus());
  Evaluation e;
  e.value = precision == Precision::high ? sum_rational<HighReal>(f, point, with_prefactor).to_complex()
                                         : sum_rational<double>(f, point, with_prefactor).to_complex();
  e.tail_estimate = tail_estimate(f.coefficients, f.max_trace, point.min_imag_eigenvalue());
  if (with_prefactor) e.tail_estimate *= std::pow(M_PI, f.prefactor_degree);
  return e;
}

namespace {

template <class Real>
LimitReport limit_check(const FourierExpansion& f, const SiegelPoint& point,
                        const std::vector<double>& t_values, double tolerance) {
  const FourierExpansion phi = siegel_operator(f);
  const Cx<Real> limit = sum_integer<Real>(phi, point);
  LimitReport report;
  report.limit = limit.to_complex();
  report.tolerance = tolerance;
  for (double t : t_values) {
    const SiegelPoint extended = point.with_corner(Complex(0.0, t));
    const Cx<Real> value = sum_integer<Real>(f, extended);
    const Real dev = (value - limit).abs();
    double d = 0.0;
    if constexpr (std::is_same_v<Real, double>) {
      d = dev;
    } else {
      d = dev.template convert_to<double>();
    }
    report.samples.push_back({t, d});
  }
  report.converging = true;
  for (std::size_t i = 1; i < report.samples.size(); ++i)
    if (report.samples[i].deviation > report.samples[i - 1].deviation) report.converging = false;
  report.passed = !report.samples.empty() && report.samples.back().deviation < tolerance;
  return report;
}

}  // namespace

LimitReport siegel_limit_check(const FourierExpansion& f, const SiegelPoint& point,
                               const std::vector<double>& t_values, double tolerance,
                               Precision precision) {
  require(f.genus() == point.genus() + 1, ErrorCode::incompatible_expansion,
          "limit check needs an expansion of genus one more than the point");
  require(std::is_sorted(t_values.begin(), t_values.end()), ErrorCode::invalid_argument,
          "t values must be increasing");
  for (double t : t_values)
    require(t > 0.0, ErrorCode::invalid_argument, "t values must be positive");
  return precision == Precision::high ? limit_check<HighReal>(f, point, t_values, tolerance)
                                      : limit_check<double>(f, point, t_values, tolerance);
}

}  // namespace siegelwb
