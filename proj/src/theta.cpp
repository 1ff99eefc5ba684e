// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/theta.hpp"

#include <cmath>

#include "siegelwb/error.hpp"

namespace siegelwb {

FourierExpansion theta_expansion(RepresentationCounter& counter, int genus, std::int64_t max_trace) {
  const Lattice& lattice = counter.lattice();
  require(lattice.rank() % 2 == 0, ErrorCode::invalid_argument, "lattice rank must be even");
  FourierExpansion f(genus, lattice.rank() / 2, max_trace);
  for (const auto& s : enumerate_indices(genus, max_trace)) f.set(s, counter.count(s));
  return f;
}

namespace {

// Neumaier-compensated complex sum; direct sums run over up to 1e8 terms.
class CompensatedSum {
 public:
  void add(Complex z) {
    step(re_, cre_, z.real());
    step(im_, cim_, z.imag());
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void step(double& sum, double& comp, double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double re_ = 0.0, im_ = 0.0, cre_ = 0.0, cim_ = 0.0;
};

// Tuple sum over vectors sorted by norm. Each term is a product of cached
// factors exp(pi i n tau_pp) and exp(2 pi i b tau_pq).
class DirectSum {
 public:
  DirectSum(const Lattice& lattice, int genus, const SiegelPoint& point, std::int64_t budget)
      : rank_(lattice.rank()), genus_(genus), budget_(budget) {
    for (const auto& v : enumerate_vectors(lattice, budget)) {
      norms_.push_back(v.norm);
      for (auto c : v.coords) coords_.push_back(c);
    }
    gram_.resize(static_cast<std::size_t>(rank_) * rank_);
    for (int p = 0; p < rank_; ++p)
      for (int q = 0; q < rank_; ++q) gram_[p * rank_ + q] = lattice.gram()(p, q);
    // prefix_[n/2] = number of vectors with norm <= n
    prefix_.assign(budget / 2 + 1, 0);
    for (auto n : norms_) ++prefix_[n / 2];
    for (std::size_t k = 1; k < prefix_.size(); ++k) prefix_[k] += prefix_[k - 1];

    const auto& tau = point.tau();
    diag_.assign(genus, std::vector<Complex>(budget / 2 + 1));
    for (int p = 0; p < genus; ++p)
      for (std::int64_t n = 0; n <= budget; n += 2) diag_[p][n / 2] = std::exp(Complex(0, M_PI) * double(n) * tau(p, p));
    off_.assign(genus * genus, std::vector<Complex>(2 * budget + 1));
    for (int p = 0; p < genus; ++p)
      for (int q = p + 1; q < genus; ++q)
        for (std::int64_t b = -budget; b <= budget; ++b)
          off_[p * genus + q][b + budget] = std::exp(Complex(0, 2 * M_PI) * double(b) * tau(p, q));
    duals_.assign(genus, std::vector<std::int64_t>(rank_));
  }

  void run() { level(0, budget_, Complex(1, 0)); }

  Complex value() const { return value_.value(); }
  std::uint64_t tuples() const { return tuples_; }
  std::uint64_t boundary_tuples() const { return boundary_; }

 private:
  void level(int p, std::int64_t remaining, Complex partial) {
    const std::size_t limit = prefix_[remaining / 2];
    for (std::size_t i = 0; i < limit; ++i) {
      const std::int64_t* x = &coords_[i * rank_];
      Complex term = partial * diag_[p][norms_[i] / 2];
      for (int q = 0; q < p; ++q) {
        std::int64_t b = 0;
        for (int k = 0; k < rank_; ++k) b += duals_[q][k] * x[k];
        term *= off_[q * genus_ + p][b + budget_];
      }
      const std::int64_t left = remaining - norms_[i];
      if (p + 1 == genus_) {
        value_.add(term);
        ++tuples_;
        if (left == 0) ++boundary_;
        continue;
      }
      for (int k = 0; k < rank_; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j < rank_; ++j) acc += gram_[k * rank_ + j] * x[j];
        duals_[p][k] = acc;
      }
      level(p + 1, left, term);
    }
  }

  int rank_;
  int genus_;
  std::int64_t budget_;
  std::vector<std::int64_t> norms_;
  std::vector<std::int64_t> coords_;
  std::vector<std::int64_t> gram_;
  std::vector<std::size_t> prefix_;
  std::vector<std::vector<Complex>> diag_;
  std::vector<std::vector<Complex>> off_;
  std::vector<std::vector<std::int64_t>> duals_;
  CompensatedSum value_;
  std::uint64_t tuples_ = 0;
  std::uint64_t boundary_ = 0;
};

}  // namespace

DirectThetaValue theta_eval(const Lattice& lattice, int genus, const SiegelPoint& point,
                            std::int64_t norm_budget) {
  require(genus >= 1, ErrorCode::invalid_argument, "genus must be at least 1");
  require(point.genus() == genus, ErrorCode::invalid_argument, "point genus does not match");
  require(norm_budget >= 0 && norm_budget % 2 == 0, ErrorCode::invalid_argument,
          "norm budget must be even and non-negative");
  DirectThetaValue out;
  std::uint64_t boundary = 0;
  if (genus == 1) {
    // One vector at a time, never materialized.
    std::vector<Complex> factor(norm_budget / 2 + 1);
    for (std::int64_t n = 0; n <= norm_budget; n += 2)
      factor[n / 2] = std::exp(Complex(0, M_PI) * double(n) * point.tau()(0, 0));
    CompensatedSum acc;
    visit_vectors(lattice, norm_budget, [&](std::span<const std::int64_t>, std::int64_t n) {
      acc.add(factor[n / 2]);
      ++out.tuples;
      if (n == norm_budget) ++boundary;
    });
    out.value = acc.value();
  } else {
    DirectSum sum(lattice, genus, point, norm_budget);
    sum.run();
    out.value = sum.value();
    out.tuples = sum.tuples();
    boundary = sum.boundary_tuples();
  }
  out.tail_estimate = static_cast<double>(boundary) *
                      std::exp(-M_PI * point.min_imag_eigenvalue() * static_cast<double>(norm_budget + 2));
  return out;
}

}  // namespace siegelwb
