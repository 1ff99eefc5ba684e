// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include <doctest.h>

#include "siegelwb/error.hpp"
#include "siegelwb/expansion.hpp"
#include "siegelwb/json_io.hpp"
#include "siegelwb/theta.hpp"

using namespace siegelwb;

namespace {

FourierExpansion theta(const char* lattice, int g, std::int64_t n) {
  RepresentationCounter c(build_lattice(lattice));
  return theta_expansion(c, g, n);
}

// A made-up genus-2 expansion with both signs.
FourierExpansion sample2() {
  FourierExpansion f(2, 4, 6);
  f.set(SymMatrix::from_rows({{0, 0}, {0, 0}}), 3);
  f.set(SymMatrix::from_rows({{2, 0}, {0, 0}}), -7);
  f.set(SymMatrix::from_rows({{2, 1}, {1, 2}}), 11);
  f.set(SymMatrix::from_rows({{0, 0}, {0, 2}}), 5);
  f.set(SymMatrix::from_rows({{4, 0}, {0, 0}}), Integer("123456789012345678901234567890"));
  return f;
}

}  // namespace

TEST_CASE("coefficients: known zero versus beyond truncation") {
  FourierExpansion f(1, 4, 4);
  f.set(SymMatrix::from_rows({{2}}), 240);
  CHECK(f.coefficient(SymMatrix::from_rows({{2}})) == Integer(240));
  CHECK(f.coefficient(SymMatrix::from_rows({{4}})) == Integer(0));
  CHECK_FALSE(f.coefficient(SymMatrix::from_rows({{6}})).has_value());
  f.set(SymMatrix::from_rows({{2}}), 0);
  CHECK(f.is_zero());
  CHECK_THROWS_AS(f.set(SymMatrix::from_rows({{6}}), 1), Error);
  CHECK_THROWS_AS(f.set(SymMatrix::from_rows({{2, 0}, {0, 2}}), 1), Error);
  CHECK_THROWS_AS(f.set(SymMatrix::from_rows({{3}}), 1), Error);
}

TEST_CASE("add, sub and scale") {
  const FourierExpansion f = sample2();
  CHECK(sub(f, f).is_zero());
  CHECK(scale(f, 1) == f);
  CHECK(scale(f, 0).is_zero());
  CHECK(add(f, f) == scale(f, 2));
  CHECK(sub(add(f, f), f) == f);
  CHECK_THROWS_AS(add(f, FourierExpansion(2, 6, 6)), Error);
  CHECK_THROWS_AS(add(f, FourierExpansion(1, 4, 6)), Error);
  const FourierExpansion shorter = add(f, FourierExpansion(2, 4, 2));
  CHECK(shorter.max_trace() == 2);
  CHECK_FALSE(shorter.coefficient(SymMatrix::from_rows({{2, 1}, {1, 2}})).has_value());
  try {
    sub(f, FourierExpansion(2, 8, 6));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::incompatible_expansion);
  }
}

TEST_CASE("genus-1 theta of E8") {
  const FourierExpansion t = theta("E8", 1, 4);
  CHECK(t.weight() == 4);
  CHECK(t.coefficient(SymMatrix::from_rows({{0}})) == Integer(1));
  CHECK(t.coefficient(SymMatrix::from_rows({{2}})) == Integer(240));
  CHECK(t.coefficient(SymMatrix::from_rows({{4}})) == Integer(2160));
  const FourierExpansion c = theta("D16plus", 3, 0);
  CHECK(c.weight() == 8);
  CHECK(c.coefficients().size() == 1);
  CHECK(c.coefficient(SymMatrix::zero(3)) == Integer(1));
}

TEST_CASE("Siegel operator") {
  CHECK(siegel_operator(FourierExpansion(3, 4, 6)).is_zero());
  const FourierExpansion phi = siegel_operator(sample2());
  CHECK(phi.genus() == 1);
  CHECK(phi.coefficient(SymMatrix::from_rows({{0}})) == Integer(3));
  CHECK(phi.coefficient(SymMatrix::from_rows({{2}})) == Integer(-7));
  CHECK(phi.coefficient(SymMatrix::from_rows({{4}})) == Integer("123456789012345678901234567890"));
  CHECK(phi.coefficients().size() == 3);
  CHECK_THROWS_AS(siegel_operator(FourierExpansion(1, 4, 4)), Error);

  const FourierExpansion e2 = theta("E8", 2, 8);
  CHECK(siegel_operator(e2) == theta("E8", 1, 8));
  CHECK(siegel_operator(e2).coefficient(SymMatrix::from_rows({{2}})) == Integer(240));
  CHECK(siegel_operator(theta("E8", 3, 6)) == theta("E8", 2, 6));
}

TEST_CASE("Siegel operator is linear") {
  const FourierExpansion f = sample2();
  const FourierExpansion g = theta("E8", 2, 6);
  CHECK(siegel_operator(add(f, g)) == add(siegel_operator(f), siegel_operator(g)));
  CHECK(siegel_operator(sub(f, g)) == sub(siegel_operator(f), siegel_operator(g)));
  CHECK(siegel_operator(scale(f, -13)) == scale(siegel_operator(f), -13));
}

TEST_CASE("theta of a direct sum is the product") {
  const FourierExpansion e8 = theta("E8", 1, 8);
  const FourierExpansion e8x2 = theta("E8x2", 1, 8);
  for (std::int64_t n = 0; n <= 8; n += 2) {
    Integer conv = 0;
    for (std::int64_t k = 0; k <= n; k += 2)
      conv += *e8.coefficient(SymMatrix::from_rows({{k}})) * *e8.coefficient(SymMatrix::from_rows({{n - k}}));
    CHECK(e8x2.coefficient(SymMatrix::from_rows({{n}})) == conv);
  }
}

TEST_CASE("derivative polynomials") {
  const auto p = DerivativePolynomial::parse("x11*x22 - 1/4*x12^2", 2);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(p.evaluate(SymMatrix::from_rows({{2, 1}, {1, 2}})) == Rational(15, 4));
  CHECK(DerivativePolynomial::parse(p.to_string(), 2) == p);
  CHECK(DerivativePolynomial::parse("x(1,2)", 3) == DerivativePolynomial::variable(3, 1, 2));
  CHECK(DerivativePolynomial::parse("x21", 2) == DerivativePolynomial::variable(2, 1, 2));
  CHECK_FALSE(DerivativePolynomial::parse("x11 + 1", 1).is_homogeneous());
  CHECK(DerivativePolynomial::parse("0", 1).degree() == -1);
  CHECK_THROWS_AS(DerivativePolynomial::parse("x13", 2), Error);
  CHECK_THROWS_AS(DerivativePolynomial::parse("x11 +", 2), Error);
  CHECK_THROWS_AS(DerivativePolynomial::parse("y11", 2), Error);
  const auto q = DerivativePolynomial::parse("x11*x23 + x33^2 + 2*x12", 3);
  CHECK(q.restrict_to_leading(2) == DerivativePolynomial::parse("2*x12", 2));
}

TEST_CASE("apply_derivative") {
  const FourierExpansion t = theta("E8", 1, 4);
  const DerivedExpansion same = apply_derivative(t, DerivativePolynomial::constant(1, 1));
  CHECK(same.prefactor_degree == 0);
  CHECK(same.coefficients.at(SymMatrix::from_rows({{2}})) == 240);
  CHECK(same.coefficients.at(SymMatrix::from_rows({{0}})) == 1);

  const DerivedExpansion d = apply_derivative(t, DerivativePolynomial::variable(1, 1, 1));
  CHECK(d.prefactor_degree == 1);
  CHECK(d.coefficients.at(SymMatrix::from_rows({{2}})) == 480);
  CHECK(d.coefficients.count(SymMatrix::from_rows({{0}})) == 0);

  CHECK_THROWS_AS(apply_derivative(t, DerivativePolynomial::parse("x11 + 1", 1)), Error);
  CHECK_THROWS_AS(apply_derivative(t, DerivativePolynomial::variable(2, 1, 1)), Error);
}

TEST_CASE("apply_derivative is linear in N and in F") {
  const FourierExpansion f = sample2();
  const FourierExpansion g = theta("E8", 2, 6);
  const auto n1 = DerivativePolynomial::parse("x11*x22", 2);
  const auto n2 = DerivativePolynomial::parse("3*x12^2 - x11^2", 2);
  const auto lhs = apply_derivative(f, n1 + n2 * Rational(2, 3)).coefficients;
  auto rhs = apply_derivative(f, n1).coefficients;
  for (const auto& [s, v] : apply_derivative(f, n2).coefficients) rhs[s] += v * Rational(2, 3);
  std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
  CHECK(lhs == rhs);

  const auto sum_f = apply_derivative(add(f, g), n1).coefficients;
  auto sum_parts = apply_derivative(f, n1).coefficients;
  for (const auto& [s, v] : apply_derivative(g, n1).coefficients) sum_parts[s] += v;
  std::erase_if(sum_parts, [](const auto& kv) { return kv.second == 0; });
  CHECK(sum_f == sum_parts);
}

TEST_CASE("expansion JSON round trip") {
  for (const auto& f : {sample2(), theta("E8", 2, 6), FourierExpansion(3, 8, 4)}) {
    const Json doc = expansion_to_json(f);
    CHECK(expansion_from_json(doc) == f);
    CHECK(expansion_from_json(Json::parse(doc.dump())) == f);
    CHECK(expansion_to_json(expansion_from_json(doc)).dump() == doc.dump());
  }
  Json bad = expansion_to_json(sample2());
  bad["format"] = "other";
  CHECK_THROWS_AS(expansion_from_json(bad), Error);
  bad = expansion_to_json(sample2());
  bad["entries"][0]["a"] = "12x";
  CHECK_THROWS_AS(expansion_from_json(bad), Error);
}
