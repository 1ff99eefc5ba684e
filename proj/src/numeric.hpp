// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

// Exponential sums over Fourier indices in double or 50-digit arithmetic.

#ifndef SIEGELWB_SRC_NUMERIC_HPP
#define SIEGELWB_SRC_NUMERIC_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

#include "siegelwb/integer.hpp"
#include "siegelwb/siegel_point.hpp"
#include "siegelwb/sym_matrix.hpp"

namespace siegelwb::detail {

using HighReal = boost::multiprecision::cpp_bin_float_50;

template <class Real>
struct Cx {
  Real re{0};
  Real im{0};

  Cx() = default;
  Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cx(Complex z) : re(z.real()), im(z.imag()) {}

  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator*(const Cx& a, const Real& s) { return {a.re * s, a.im * s}; }

  Complex to_complex() const {
    if constexpr (std::is_same_v<Real, double>) {
      return {re, im};
    } else {
      return {re.template convert_to<double>(), im.template convert_to<double>()};
    }
  }
  Real abs() const {
    using std::sqrt;
    return sqrt(re * re + im * im);
  }
};

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real to_real(const Integer& a) {
  return a.template convert_to<Real>();
}

template <class Real>
Real to_real(const Rational& a) {
  if constexpr (std::is_same_v<Real, double>) {
    return a.template convert_to<double>();
  } else {
    return Real(numerator(a)) / Real(denominator(a));
  }
}

/// tr(S M) = sum_{p,q} S_pq M_pq for symmetric S and M.
template <class Real>
Cx<Real> trace_product(const SymMatrix& s, const ComplexSymMatrix& m) {
  Cx<Real> acc;
  for (int p = 0; p < s.dim(); ++p)
    for (int q = p; q < s.dim(); ++q) {
      const auto v = s(p, q);
      if (v == 0) continue;
      const Real factor = Real(p == q ? v : 2 * v);
      const Cx<Real> z(m(p, q));
      acc += z * factor;
    }
  return acc;
}

/// exp(pi i z).
template <class Real>
Cx<Real> exp_pi_i(const Cx<Real>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  const Real pi_ = pi<Real>();
  const Real mag = exp(-pi_ * z.im);
  const Real arg = pi_ * z.re;
  return {mag * cos(arg), mag * sin(arg)};
}

/// sum_S w(S) exp(pi i tr(S tau)), with w returning Cx<Real>.
template <class Real, class Map, class Weight>
Cx<Real> exp_sum(const Map& coefficients, const ComplexSymMatrix& tau, Weight&& weight) {
  Cx<Real> acc;
  for (const auto& [s, a] : coefficients) acc += weight(s, a) * exp_pi_i(trace_product<Real>(s, tau));
  return acc;
}

/// (pi i)^d
template <class Real>
Cx<Real> pi_i_power(int d) {
  Cx<Real> r(Real(1), Real(0));
  const Cx<Real> step(Real(0), pi<Real>());
  for (int k = 0; k < d; ++k) r = r * step;
  return r;
}

}  // namespace siegelwb::detail

#endif  // SIEGELWB_SRC_NUMERIC_HPP
