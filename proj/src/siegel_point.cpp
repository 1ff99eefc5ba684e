// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/siegel_point.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "siegelwb/error.hpp"

namespace siegelwb {

ComplexSymMatrix::ComplexSymMatrix(int dim) : dim_(dim) {
  require(dim >= 0, ErrorCode::invalid_argument, "matrix dimension must be non-negative");
  upper_.assign(static_cast<std::size_t>(dim) * (dim + 1) / 2, Complex{});
}

ComplexSymMatrix ComplexSymMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const int n = static_cast<int>(rows.size());
  ComplexSymMatrix m(n);
  for (int p = 0; p < n; ++p) {
    require(static_cast<int>(rows[p].size()) == n, ErrorCode::invalid_argument,
            "complex matrix rows must form a square");
    for (int q = p; q < n; ++q) {
      const Complex a = rows[p][q];
      const Complex b = rows[q][p];
      require(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)), ErrorCode::invalid_argument,
              "complex matrix is not symmetric");
      m.set(p, q, a);
    }
  }
  return m;
}

ComplexSymMatrix ComplexSymMatrix::scalar(int dim, Complex value) {
  ComplexSymMatrix m(dim);
  for (int p = 0; p < dim; ++p) m.set(p, p, value);
  return m;
}

ComplexSymMatrix ComplexSymMatrix::operator+(const ComplexSymMatrix& other) const {
  require(dim_ == other.dim_, ErrorCode::invalid_argument, "matrix dimension mismatch");
  ComplexSymMatrix m = *this;
  for (std::size_t i = 0; i < upper_.size(); ++i) m.upper_[i] += other.upper_[i];
  return m;
}

ComplexSymMatrix ComplexSymMatrix::operator*(Complex c) const {
  ComplexSymMatrix m = *this;
  for (auto& z : m.upper_) z *= c;
  return m;
}

double min_imag_eigenvalue(const ComplexSymMatrix& m) {
  Eigen::MatrixXd im(m.dim(), m.dim());
  for (int p = 0; p < m.dim(); ++p)
    for (int q = 0; q < m.dim(); ++q) im(p, q) = m(p, q).imag();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(im, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

SiegelPoint::SiegelPoint(ComplexSymMatrix tau) : tau_(std::move(tau)) {
  require(tau_.dim() >= 1, ErrorCode::invalid_argument, "Siegel point genus must be at least 1");
  for (const auto& z : tau_.upper())
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), ErrorCode::domain_error,
            "tau has non-finite entries");
  min_eig_ = siegelwb::min_imag_eigenvalue(tau_);
  require(min_eig_ > 0.0, ErrorCode::domain_error,
          "Im(tau) is not positive definite (smallest eigenvalue " + std::to_string(min_eig_) + ")");
}

SiegelPoint SiegelPoint::with_corner(Complex corner) const {
  const int g = genus();
  ComplexSymMatrix m(g + 1);
  for (int p = 0; p < g; ++p)
    for (int q = p; q < g; ++q) m.set(p, q, tau_(p, q));
  m.set(g, g, corner);
  return SiegelPoint(std::move(m));
}

}  // namespace siegelwb
