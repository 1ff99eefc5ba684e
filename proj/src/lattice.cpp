// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "siegelwb/error.hpp"

namespace siegelwb {

namespace {

// Cartan matrix of E8, Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 on 4.
SymMatrix e8_gram() {
  SymMatrix g(8);
  for (int p = 0; p < 8; ++p) g.set(p, p, 2);
  const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& e : edges) g.set(e[0], e[1], -1);
  return g;
}

// D16+ = D16 u (D16 + (1/2,...,1/2)) with the basis, in doubled coordinates,
//   (1,-1,...,-1,1), 2(e1+e2), 2(e_k - e_{k-1}) for k = 2..15.
// Inner products are dot products of doubled coordinates divided by 4.
SymMatrix d16plus_gram() {
  constexpr int n = 16;
  std::vector<std::vector<int>> basis;
  std::vector<int> h(n, -1);
  h.front() = 1;
  h.back() = 1;
  basis.push_back(h);
  std::vector<int> b(n, 0);
  b[0] = 2;
  b[1] = 2;
  basis.push_back(b);
  for (int k = 1; k <= 14; ++k) {
    std::vector<int> d(n, 0);
    d[k] = 2;
    d[k - 1] = -2;
    basis.push_back(d);
  }
  SymMatrix g(n);
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q) {
      int dot = 0;
      for (int i = 0; i < n; ++i) dot += basis[p][i] * basis[q][i];
      g.set(p, q, dot / 4);
    }
  return g;
}

// Fincke-Pohst enumeration of all x with x^T G x <= max_norm. Norms are
// accumulated exactly in integers alongside the floating-point pruning.
class Enumerator {
 public:
  Enumerator(const Lattice& lattice, std::int64_t max_norm)
      : gram_(lattice.gram()), n_(lattice.rank()), max_norm_(max_norm) {
    // Quadratic completion: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
    q_.assign(n_, std::vector<double>(n_, 0.0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) q_[i][j] = static_cast<double>(gram_(i, j));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        q_[j][i] = q_[i][j];
        q_[i][j] /= q_[i][i];
      }
      for (int k = i + 1; k < n_; ++k)
        for (int l = k; l < n_; ++l) q_[k][l] -= q_[k][i] * q_[i][l];
    }
    x_.assign(n_, 0);
    // acc_[i][k] = sum_{j >= i} G_kj x_j, for the exact norm.
    acc_.assign(n_ + 1, std::vector<std::int64_t>(n_, 0));
    bound_ = static_cast<double>(max_norm) + 1e-6 * (1.0 + static_cast<double>(max_norm));
  }

  template <class Visit>
  void run(Visit&& visit) {
    if (n_ == 0) return;
    recurse(n_ - 1, 0.0, 0, visit);
  }

  /// Norm histogram; only vectors whose last nonzero coordinate is positive
  /// are walked, the rest by negation.
  void count(std::vector<std::uint64_t>& counts) {
    counts_ = &counts;
    count_rec(n_ - 1, 0.0, 0, true);
  }

 private:
  void count_rec(int i, double used, std::int64_t exact, bool zero_above) {
    double center = 0.0;
    for (int j = i + 1; j < n_; ++j) center -= q_[i][j] * static_cast<double>(x_[j]);
    const double remaining = bound_ - used;
    if (remaining < 0) return;
    const double radius = std::sqrt(remaining / q_[i][i]);
    auto lo = static_cast<std::int64_t>(std::ceil(center - radius));
    const auto hi = static_cast<std::int64_t>(std::floor(center + radius));
    if (zero_above) lo = std::max<std::int64_t>(lo, 0);
    const auto& above = acc_[i + 1];
    if (i == 0) {
      const std::int64_t g = gram_(0, 0);
      const std::int64_t a2 = 2 * above[0];
      auto& counts = *counts_;
      for (std::int64_t v = lo; v <= hi; ++v) {
        const std::int64_t n = exact + v * (g * v + a2);
        if (n <= max_norm_) counts[n / 2] += (zero_above && v == 0) ? 1 : 2;
      }
      return;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      const double diff = static_cast<double>(v) - center;
      const double next_used = used + q_[i][i] * diff * diff;
      if (next_used > bound_) continue;
      x_[i] = v;
      auto& cur = acc_[i];
      for (int k = 0; k < i; ++k) cur[k] = above[k] + gram_(k, i) * v;
      count_rec(i - 1, next_used, exact + v * (gram_(i, i) * v + 2 * above[i]), zero_above && v == 0);
    }
    x_[i] = 0;
  }

  template <class Visit>
  void recurse(int i, double used, std::int64_t exact, Visit& visit) {
    double center = 0.0;
    for (int j = i + 1; j < n_; ++j) center -= q_[i][j] * static_cast<double>(x_[j]);
    const double remaining = bound_ - used;
    if (remaining < 0) return;
    const double radius = std::sqrt(remaining / q_[i][i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - radius));
    const auto hi = static_cast<std::int64_t>(std::floor(center + radius));
    const auto& above = acc_[i + 1];
    for (std::int64_t v = lo; v <= hi; ++v) {
      const double diff = static_cast<double>(v) - center;
      const double next_used = used + q_[i][i] * diff * diff;
      if (next_used > bound_) continue;
      x_[i] = v;
      // exact contribution of x_i: x_i (G_ii x_i + 2 sum_{j>i} G_ij x_j)
      const std::int64_t next_exact = exact + v * (gram_(i, i) * v + 2 * above[i]);
      if (i == 0) {
        if (next_exact <= max_norm_) visit(static_cast<const std::vector<std::int64_t>&>(x_), next_exact);
      } else {
        auto& cur = acc_[i];
        for (int k = 0; k < i; ++k) cur[k] = above[k] + gram_(k, i) * v;
        recurse(i - 1, next_used, next_exact, visit);
      }
    }
    x_[i] = 0;
  }

  const SymMatrix& gram_;
  int n_;
  std::int64_t max_norm_;
  double bound_;
  std::vector<std::vector<double>> q_;
  std::vector<std::int64_t> x_;
  std::vector<std::vector<std::int64_t>> acc_;
  std::vector<std::uint64_t>* counts_ = nullptr;
};

void require_norm_bound(std::int64_t max_norm) {
  require(max_norm >= 0 && max_norm % 2 == 0, ErrorCode::invalid_argument,
          "max_norm must be even and non-negative, got " + std::to_string(max_norm));
}

}  // namespace

Lattice::Lattice(std::string name, SymMatrix gram) : name_(std::move(name)), gram_(std::move(gram)) {
  require(gram_.dim() >= 1, ErrorCode::invalid_argument, "lattice rank must be positive");
  require(gram_.has_even_diagonal(), ErrorCode::invalid_argument,
          "lattice " + name_ + " is not even (odd diagonal entry)");
  require(gram_.is_positive_definite(), ErrorCode::invalid_argument,
          "lattice " + name_ + " Gram matrix is not positive definite");
  require(gram_.determinant() == 1, ErrorCode::invalid_argument,
          "lattice " + name_ + " is not unimodular");
}

std::int64_t Lattice::inner(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
  std::int64_t acc = 0;
  for (int p = 0; p < rank(); ++p) {
    std::int64_t row = 0;
    for (int q = 0; q < rank(); ++q) row += gram_(p, q) * y[q];
    acc += x[p] * row;
  }
  return acc;
}

Lattice build_lattice(const std::string& name) {
  if (name == "E8") return Lattice("E8", e8_gram());
  if (name == "D16plus") return Lattice("D16plus", d16plus_gram());
  if (name == "E8x2") {
    Lattice e8("E8", e8_gram());
    return direct_sum(e8, e8);
  }
  fail(ErrorCode::unsupported_lattice,
       "unsupported lattice '" + name + "' (supported: E8, E8x2, D16plus)");
}

Lattice direct_sum(const Lattice& first, const Lattice& second) {
  std::string name = first.name() == second.name() ? first.name() + "x2"
                                                    : first.name() + "+" + second.name();
  return Lattice(std::move(name), first.gram().direct_sum(second.gram()));
}

std::vector<std::string> supported_lattices() { return {"E8", "E8x2", "D16plus"}; }

void visit_vectors(const Lattice& lattice, std::int64_t max_norm,
                   const std::function<void(std::span<const std::int64_t>, std::int64_t)>& visit) {
  require_norm_bound(max_norm);
  Enumerator e(lattice, max_norm);
  e.run([&](const std::vector<std::int64_t>& x, std::int64_t norm) { visit(x, norm); });
}

std::vector<LatticeVector> enumerate_vectors(const Lattice& lattice, std::int64_t max_norm) {
  require_norm_bound(max_norm);
  std::vector<LatticeVector> out;
  Enumerator e(lattice, max_norm);
  e.run([&](const std::vector<std::int64_t>& x, std::int64_t norm) { out.push_back({x, norm}); });
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coords < b.coords;
  });
  return out;
}

std::vector<std::uint64_t> count_vectors_by_norm(const Lattice& lattice, std::int64_t max_norm) {
  require_norm_bound(max_norm);
  std::vector<std::uint64_t> counts(max_norm / 2 + 1, 0);
  Enumerator e(lattice, max_norm);
  e.count(counts);
  return counts;
}

}  // namespace siegelwb
