// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_FAY_HPP
#define SIEGELWB_FAY_HPP

#include <vector>

#include "siegelwb/evaluation.hpp"
#include "siegelwb/expansion.hpp"
#include "siegelwb/siegel_point.hpp"

namespace siegelwb {

using ComplexVector = std::vector<Complex>;

/// Inputs of the first-order degeneration period matrix of a genus-g curve
/// with points a, b glued. s, c1, c2 are free (default 0).
struct DegenerationData {
  SiegelPoint tau;
  ComplexVector v_a;  ///< omega_p / dz_a at a
  ComplexVector v_b;  ///< omega_p / dz_b at b
  ComplexVector aj;   ///< AJ(b) - AJ(a)
  ComplexVector s;
  Complex c1{0.0, 0.0};
  Complex c2{0.0, 0.0};
  Complex lambda{1.0, 0.0};
  Complex mu{1.0, 0.0};

  int genus() const noexcept { return tau.genus(); }
  /// Throws invalid_argument on length mismatches or lambda/mu == 0.
  void validate() const;
};

/// sigma_pq = 2 pi i (v_p(a) v_q(b) + v_q(a) v_p(b)).
ComplexSymMatrix sigma_matrix(const ComplexVector& v_a, const ComplexVector& v_b);

/// (g+1) x (g+1) period matrix to first order in t:
///   [ tau + t sigma        aj + t s                        ]
///   [ (aj + t s)^T         (Log t + c1 + c2 t) / (2 pi i)  ]
/// with sigma built from lambda v_a, mu v_b and Log the principal branch.
/// Throws degenerate_fiber for t == 0.
ComplexSymMatrix period_matrix_first_order(const DegenerationData& data, Complex t);

/// A = sum_S a(S) N(S) (pi i tr(S sigma)) exp(pi i tr(S tau)).
Complex coefficient_A(const FourierExpansion& f, const DerivativePolynomial& n,
                      const SiegelPoint& tau, const ComplexSymMatrix& sigma,
                      Precision precision = Precision::standard);

/// B = sum over X with X_{g+1,g+1} = 2 of
///   a(X) N(X) exp(2 pi i sum_p X_{p,g+1} aj_p) exp(pi i sum_{p,q<=g} X_pq tau_pq).
Complex coefficient_B(const FourierExpansion& f_next, const DerivativePolynomial& n_next,
                      const SiegelPoint& tau, const ComplexVector& aj,
                      Precision precision = Precision::standard);

struct DerivativeIdentityReport {
  Complex direct;             ///< coefficient_A
  Complex finite_difference;  ///< d/dt at 0 of N(F)(tau + t sigma), Richardson
  double abs_discrepancy = 0.0;
  double rel_discrepancy = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Compares coefficient_A with a central difference (step h and h/2, one
/// Richardson step) of t -> sum a(S) N(S) exp(pi i tr(S (tau + t sigma))).
/// The (pi i)^d prefactor is excluded on both sides. When both sides vanish
/// to 1e-300 the check passes with zero discrepancy.
DerivativeIdentityReport derivative_identity_check(const FourierExpansion& f,
                                                   const DerivativePolynomial& n,
                                                   const SiegelPoint& tau,
                                                   const ComplexSymMatrix& sigma, double tolerance,
                                                   double step = 1e-4,
                                                   Precision precision = Precision::standard);

struct ScalingSample {
  Complex lambda;
  Complex mu;
  Complex a;      ///< A with sigma from (lambda v_a, mu v_b)
  Complex ratio;  ///< A / (lambda mu)
};

struct ScalingLawReport {
  std::vector<ScalingSample> samples;
  Complex d;  ///< ratio at the first sample
  double max_rel_spread = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

ScalingLawReport scaling_law_check(const FourierExpansion& f, const DerivativePolynomial& n,
                                   const SiegelPoint& tau, const ComplexVector& v_a,
                                   const ComplexVector& v_b,
                                   const std::vector<std::pair<Complex, Complex>>& pairs,
                                   double tolerance);

}  // namespace siegelwb

#endif  // SIEGELWB_FAY_HPP
