// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#ifndef SIEGELWB_SIEGEL_POINT_HPP
#define SIEGELWB_SIEGEL_POINT_HPP

#include <complex>
#include <vector>

namespace siegelwb {

using Complex = std::complex<double>;

/// Symmetric complex matrix, upper triangle stored row-major.
class ComplexSymMatrix {
 public:
  ComplexSymMatrix() = default;
  explicit ComplexSymMatrix(int dim);

  /// Throws invalid_argument if `rows` is not square; symmetrizes nothing,
  /// entries (p,q) and (q,p) must agree to 1e-12 relative.
  static ComplexSymMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static ComplexSymMatrix scalar(int dim, Complex value);

  int dim() const noexcept { return dim_; }
  Complex operator()(int p, int q) const noexcept { return upper_[offset(p, q)]; }
  void set(int p, int q, Complex value) noexcept { upper_[offset(p, q)] = value; }
  const std::vector<Complex>& upper() const noexcept { return upper_; }

  ComplexSymMatrix operator+(const ComplexSymMatrix& other) const;
  ComplexSymMatrix operator*(Complex c) const;

 private:
  std::size_t offset(int p, int q) const noexcept {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(p) * dim_ - static_cast<std::size_t>(p) * (p - 1) / 2 + (q - p);
  }

  int dim_ = 0;
  std::vector<Complex> upper_;
};

/// Point of the Siegel upper half-space: symmetric tau with Im(tau) positive
/// definite. Construction throws domain_error otherwise.
class SiegelPoint {
 public:
  explicit SiegelPoint(ComplexSymMatrix tau);

  static SiegelPoint scalar(int genus, Complex value) {
    return SiegelPoint(ComplexSymMatrix::scalar(genus, value));
  }

  int genus() const noexcept { return tau_.dim(); }
  const ComplexSymMatrix& tau() const noexcept { return tau_; }
  /// Smallest eigenvalue of Im(tau).
  double min_imag_eigenvalue() const noexcept { return min_eig_; }

  /// tau (+) corner, a (g+1) x (g+1) block-diagonal point.
  SiegelPoint with_corner(Complex corner) const;

 private:
  ComplexSymMatrix tau_;
  double min_eig_ = 0.0;
};

/// Smallest eigenvalue of the imaginary part (no positivity check).
double min_imag_eigenvalue(const ComplexSymMatrix& m);

}  // namespace siegelwb

#endif  // SIEGELWB_SIEGEL_POINT_HPP
