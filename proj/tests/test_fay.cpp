// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include <doctest.h>

#include <cmath>

#include "siegelwb/error.hpp"
#include "siegelwb/fay.hpp"
#include "siegelwb/json_io.hpp"
#include "siegelwb/theta.hpp"

using namespace siegelwb;

namespace {

const Complex kTwoPiI(0.0, 2.0 * M_PI);

double rel(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double max_diff(const ComplexSymMatrix& a, const ComplexSymMatrix& b) {
  double m = 0.0;
  for (int p = 0; p < a.dim(); ++p)
    for (int q = p; q < a.dim(); ++q) m = std::max(m, std::abs(a(p, q) - b(p, q)));
  return m;
}

FourierExpansion theta(const char* lattice, int g, std::int64_t n) {
  RepresentationCounter c(build_lattice(lattice));
  return theta_expansion(c, g, n);
}

DegenerationData sample_data() {
  const SiegelPoint tau(ComplexSymMatrix::from_rows({{{0.1, 1.2}, {0.05, 0.2}}, {{0.05, 0.2}, {-0.2, 1.1}}}));
  return DegenerationData{tau, {{0.3, 0.1}, {-0.2, 0.4}}, {{0.5, -0.1}, {0.1, 0.2}}, {{0.15, 0.3}, {-0.1, 0.25}},
                          {{0.01, 0.0}, {0.0, 0.02}}, {0.2, 0.1}, {0.05, 0.0}};
}

}  // namespace

TEST_CASE("sigma matrix") {
  const auto s = sigma_matrix({1, 0}, {0, 1});
  CHECK(s(0, 1) == kTwoPiI);
  CHECK(s(0, 0) == Complex(0, 0));
  CHECK(s(1, 1) == Complex(0, 0));
  const auto z = sigma_matrix({0, 0}, {0, 0});
  CHECK(z(0, 1) == Complex(0, 0));
  CHECK_THROWS_AS(sigma_matrix({1, 0}, {1}), Error);

  const ComplexVector u{{0.3, 0.1}, {-0.2, 0.4}}, v{{0.5, -0.1}, {0.1, 0.2}}, w{{1.0, 0.0}, {0.0, -1.0}};
  const Complex lambda(2.0, 1.0), mu(-1.5, 0.5);
  ComplexVector lu(2), mv(2), sum(2);
  for (int p = 0; p < 2; ++p) {
    lu[p] = lambda * u[p];
    mv[p] = mu * v[p];
    sum[p] = lambda * u[p] + w[p];
  }
  CHECK(max_diff(sigma_matrix(lu, mv), sigma_matrix(u, v) * (lambda * mu)) < 1e-12);
  CHECK(max_diff(sigma_matrix(sum, v), sigma_matrix(u, v) * lambda + sigma_matrix(w, v)) < 1e-12);
  CHECK(max_diff(sigma_matrix(u, v), sigma_matrix(v, u)) < 1e-15);
}

TEST_CASE("first-order period matrix") {
  DegenerationData d = sample_data();
  CHECK_THROWS_AS(period_matrix_first_order(d, {0, 0}), Error);
  try {
    period_matrix_first_order(d, {0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_fiber);
  }
  const Complex t(1e-3, 0.0);
  const auto m = period_matrix_first_order(d, t);
  CHECK(m.dim() == 3);
  // exp(2 pi i T_33) = t exp(c1) (1 + c2 t) + O(t^2)
  const Complex e = std::exp(kTwoPiI * m(2, 2));
  CHECK(std::abs(e - t * std::exp(d.c1) * (1.0 + d.c2 * t)) < 1e-6 * std::abs(t) * 10);
  CHECK(m(0, 2) == d.aj[0] + t * d.s[0]);

  // real data: the corner goes to +i infinity as t -> 0+
  DegenerationData real = d;
  real.c1 = real.c2 = 0.0;
  double last = 0.0;
  for (double tt : {1e-1, 1e-3, 1e-6}) {
    const double im = period_matrix_first_order(real, {tt, 0.0})(1 + 1, 2).imag();
    CHECK(im == doctest::Approx(-std::log(tt) / (2 * M_PI)));
    CHECK(im > last);
    last = im;
  }

  DegenerationData flat = d;
  flat.v_a = {0, 0};
  flat.s.clear();
  const auto f = period_matrix_first_order(flat, {0.01, 0.0});
  CHECK(f(0, 0) == d.tau.tau()(0, 0));
  CHECK(f(0, 1) == d.tau.tau()(0, 1));

  DegenerationData bad = d;
  bad.lambda = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = d;
  bad.aj.pop_back();
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("coefficient A") {
  const FourierExpansion f = theta("E8", 2, 8);
  const DegenerationData d = sample_data();
  const auto one = DerivativePolynomial::constant(2, 1);
  CHECK(coefficient_A(f, one, d.tau, ComplexSymMatrix(2)) == Complex(0, 0));
  CHECK(coefficient_A(FourierExpansion(2, 4, 8), one, d.tau, sigma_matrix(d.v_a, d.v_b)) == Complex(0, 0));

  const auto s1 = sigma_matrix(d.v_a, d.v_b);
  const auto s2 = sigma_matrix(d.aj, d.v_a);
  const auto n = DerivativePolynomial::parse("x12 + 2*x11", 2);
  const Complex a12 = coefficient_A(f, n, d.tau, s1 + s2);
  CHECK(rel(a12, coefficient_A(f, n, d.tau, s1) + coefficient_A(f, n, d.tau, s2)) < 1e-9);
  CHECK(rel(coefficient_A(f, n, d.tau, s1, Precision::high), coefficient_A(f, n, d.tau, s1)) < 1e-12);
  CHECK_THROWS_AS(coefficient_A(f, DerivativePolynomial::constant(1, 1), d.tau, s1), Error);
}

TEST_CASE("coefficient B") {
  const FourierExpansion next = theta("E8", 3, 6);
  const DegenerationData d = sample_data();
  const auto one = DerivativePolynomial::constant(3, 1);
  CHECK(coefficient_B(FourierExpansion(3, 4, 6), one, d.tau, d.aj) == Complex(0, 0));

  // support with corner 0 only
  FourierExpansion flat(3, 4, 6);
  flat.set(SymMatrix::from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 0}}), 17);
  CHECK(coefficient_B(flat, one, d.tau, d.aj) == Complex(0, 0));

  const Complex b = coefficient_B(next, one, d.tau, d.aj);
  CHECK(std::abs(b) > 0.0);
  ComplexVector shifted = d.aj;
  shifted[0] += 1.0;
  shifted[1] -= 3.0;
  CHECK(rel(coefficient_B(next, one, d.tau, shifted), b) < 1e-12);

  // B never reads lambda or mu
  DegenerationData other = d;
  other.lambda = {3.0, -1.0};
  other.mu = {0.5, 0.0};
  CHECK(coefficient_B(next, one, other.tau, other.aj) == b);

  // sum over corner-2 indices written out by hand
  Complex expected(0, 0);
  for (const auto& [x, a] : next.coefficients()) {
    if (x(2, 2) != 2) continue;
    Complex border = std::exp(kTwoPiI * (double(x(0, 2)) * d.aj[0] + double(x(1, 2)) * d.aj[1]));
    Complex tr = double(x(0, 0)) * d.tau.tau()(0, 0) + double(x(1, 1)) * d.tau.tau()(1, 1) +
                 2.0 * double(x(0, 1)) * d.tau.tau()(0, 1);
    expected += a.convert_to<double>() * border * std::exp(Complex(0, M_PI) * tr);
  }
  CHECK(rel(b, expected) < 1e-12);
  CHECK_THROWS_AS(coefficient_B(theta("E8", 2, 4), DerivativePolynomial::constant(2, 1), d.tau, d.aj), Error);
}

TEST_CASE("derivative identity") {
  const FourierExpansion f1 = theta("E8", 1, 20);
  const SiegelPoint tau1 = SiegelPoint::scalar(1, {0, 1.3});
  const auto sigma1 = sigma_matrix({0.1}, {0.2});
  CHECK(sigma1(0, 0) == kTwoPiI * 2.0 * 0.1 * 0.2);
  const auto r1 = derivative_identity_check(f1, DerivativePolynomial::constant(1, 1), tau1, sigma1, 1e-6);
  CHECK(r1.passed);
  CHECK(r1.rel_discrepancy < 1e-6);

  const auto x11 = DerivativePolynomial::variable(1, 1, 1);
  const SiegelPoint tau_r = SiegelPoint::scalar(1, {0.37, 1.05});
  CHECK(derivative_identity_check(f1, x11, tau_r, sigma1, 1e-6).passed);

  const auto zero = derivative_identity_check(f1, x11, tau1, ComplexSymMatrix(1), 1e-6);
  CHECK(zero.passed);
  CHECK(zero.abs_discrepancy == 0.0);

  const auto high = derivative_identity_check(f1, x11, tau_r, sigma1, 1e-9, 1e-6, Precision::high);
  CHECK(high.passed);
}

TEST_CASE("scaling law") {
  const FourierExpansion f = theta("E8", 2, 6);
  const DegenerationData d = sample_data();
  const std::vector<std::pair<Complex, Complex>> pairs = {{1, 1}, {2, 1}, {1, 3}, {-1, 2}};
  const auto n = DerivativePolynomial::parse("x11 - x12", 2);
  const ScalingLawReport r = scaling_law_check(f, n, d.tau, d.v_a, d.v_b, pairs, 1e-9);
  CHECK(r.passed);
  CHECK(r.samples.size() == 4);
  CHECK(std::abs(r.d) > 0);

  const ScalingLawReport z = scaling_law_check(f, n, d.tau, {0, 0}, d.v_b, pairs, 1e-9);
  CHECK(z.passed);
  CHECK(z.d == Complex(0, 0));

  const ScalingLawReport inv = scaling_law_check(f, n, d.tau, d.v_a, d.v_b, {{2, 0.5}, {-4, -0.25}, {{0, 1}, {0, -1}}}, 1e-12);
  for (const auto& s : inv.samples) CHECK(rel(s.a, inv.samples[0].a) < 1e-12);
}

TEST_CASE("degeneration JSON round trip") {
  const DegenerationData d = sample_data();
  const Json doc = degeneration_to_json(d);
  const DegenerationData back = degeneration_from_json(Json::parse(doc.dump()));
  CHECK(degeneration_to_json(back).dump() == doc.dump());
  Json bad = doc;
  bad["v_a"] = Json::array({Json::array({1.0, 0.0})});
  CHECK_THROWS_AS(degeneration_from_json(bad), Error);
  bad = doc;
  bad.erase("tau");
  CHECK_THROWS_AS(degeneration_from_json(bad), Error);
}
