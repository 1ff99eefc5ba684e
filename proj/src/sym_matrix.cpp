// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/sym_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "siegelwb/error.hpp"

namespace siegelwb {

namespace {

using Dense = std::vector<std::vector<Integer>>;

Dense to_dense(const SymMatrix& m) {
  Dense a(m.dim(), std::vector<Integer>(m.dim()));
  for (int p = 0; p < m.dim(); ++p)
    for (int q = 0; q < m.dim(); ++q) a[p][q] = m(p, q);
  return a;
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  require(dim >= 0, ErrorCode::invalid_argument, "matrix dimension must be non-negative");
  upper_.assign(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int p = 0; p < n; ++p) {
    require(static_cast<int>(rows[p].size()) == n, ErrorCode::invalid_argument,
            "matrix rows must form a square");
    for (int q = 0; q < n; ++q) {
      require(rows[p][q] == rows[q][p], ErrorCode::invalid_argument, "matrix is not symmetric");
      if (p <= q) m.set(p, q, rows[p][q]);
    }
  }
  return m;
}

SymMatrix SymMatrix::from_upper(int dim, std::span<const std::int64_t> upper) {
  SymMatrix m(dim);
  require(upper.size() == m.upper_.size(), ErrorCode::invalid_argument,
          "upper triangle has " + std::to_string(upper.size()) + " entries, expected " +
              std::to_string(m.upper_.size()));
  std::copy(upper.begin(), upper.end(), m.upper_.begin());
  return m;
}

std::vector<std::vector<std::int64_t>> SymMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> r(dim_, std::vector<std::int64_t>(dim_));
  for (int p = 0; p < dim_; ++p)
    for (int q = 0; q < dim_; ++q) r[p][q] = (*this)(p, q);
  return r;
}

std::int64_t SymMatrix::trace() const noexcept {
  std::int64_t t = 0;
  for (int p = 0; p < dim_; ++p) t += (*this)(p, p);
  return t;
}

std::vector<std::int64_t> SymMatrix::diagonal() const {
  std::vector<std::int64_t> d(dim_);
  for (int p = 0; p < dim_; ++p) d[p] = (*this)(p, p);
  return d;
}

bool SymMatrix::has_even_diagonal() const noexcept {
  for (int p = 0; p < dim_; ++p)
    if ((*this)(p, p) % 2 != 0) return false;
  return true;
}

Integer SymMatrix::determinant() const {
  if (dim_ == 0) return 1;
  Dense a = to_dense(*this);
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < dim_; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < dim_; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim_; ++i) {
      for (int j = k + 1; j < dim_; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[dim_ - 1][dim_ - 1];
}

bool SymMatrix::is_positive_semidefinite() const {
  // Symmetric Bareiss elimination. A zero pivot of a psd Schur complement
  // forces its whole row to vanish; such a row is skipped without touching
  // `prev`, which keeps the remaining divisions exact.
  Dense a = to_dense(*this);
  Integer prev = 1;
  for (int k = 0; k < dim_; ++k) {
    const Integer pivot = a[k][k];
    if (pivot < 0) return false;
    if (pivot == 0) {
      for (int j = k + 1; j < dim_; ++j)
        if (a[k][j] != 0) return false;
      continue;
    }
    for (int i = k + 1; i < dim_; ++i)
      for (int j = k + 1; j < dim_; ++j) a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = pivot;
  }
  return true;
}

bool SymMatrix::is_positive_definite() const {
  Dense a = to_dense(*this);
  Integer prev = 1;
  for (int k = 0; k < dim_; ++k) {
    if (a[k][k] <= 0) return false;
    for (int i = k + 1; i < dim_; ++i)
      for (int j = k + 1; j < dim_; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

SymMatrix SymMatrix::direct_sum(const SymMatrix& other) const {
  SymMatrix m(dim_ + other.dim_);
  for (int p = 0; p < dim_; ++p)
    for (int q = p; q < dim_; ++q) m.set(p, q, (*this)(p, q));
  for (int p = 0; p < other.dim_; ++p)
    for (int q = p; q < other.dim_; ++q) m.set(dim_ + p, dim_ + q, other(p, q));
  return m;
}

SymMatrix SymMatrix::leading_block(int k) const {
  require(k >= 0 && k <= dim_, ErrorCode::invalid_argument, "block size out of range");
  SymMatrix m(k);
  for (int p = 0; p < k; ++p)
    for (int q = p; q < k; ++q) m.set(p, q, (*this)(p, q));
  return m;
}

SymMatrix SymMatrix::remove_index(int r) const {
  require(r >= 0 && r < dim_, ErrorCode::invalid_argument, "index out of range");
  SymMatrix m(dim_ - 1);
  for (int p = 0, pp = 0; p < dim_; ++p) {
    if (p == r) continue;
    for (int q = p, qq = pp; q < dim_; ++q) {
      if (q == r) continue;
      m.set(pp, qq, (*this)(p, q));
      ++qq;
    }
    ++pp;
  }
  return m;
}

SymMatrix SymMatrix::congruent(const std::vector<std::int64_t>& u) const {
  require(u.size() == static_cast<std::size_t>(dim_) * dim_, ErrorCode::invalid_argument,
          "transformation must be square of the matrix dimension");
  // (U^T S U)_pq = sum_{i,j} U_ip S_ij U_jq
  std::vector<std::int64_t> su(static_cast<std::size_t>(dim_) * dim_, 0);
  for (int i = 0; i < dim_; ++i)
    for (int q = 0; q < dim_; ++q) {
      std::int64_t acc = 0;
      for (int j = 0; j < dim_; ++j) acc += (*this)(i, j) * u[j * dim_ + q];
      su[i * dim_ + q] = acc;
    }
  SymMatrix m(dim_);
  for (int p = 0; p < dim_; ++p)
    for (int q = p; q < dim_; ++q) {
      std::int64_t acc = 0;
      for (int i = 0; i < dim_; ++i) acc += u[i * dim_ + p] * su[i * dim_ + q];
      m.set(p, q, acc);
    }
  return m;
}

std::string SymMatrix::key() const {
  std::ostringstream out;
  out << "g=" << dim_ << ';';
  for (std::size_t i = 0; i < upper_.size(); ++i) {
    if (i) out << ',';
    out << upper_[i];
  }
  return out.str();
}

SymMatrix SymMatrix::from_key(const std::string& key) {
  auto bad = [&] { fail(ErrorCode::parse_error, "malformed index key '" + key + "'"); };
  if (key.rfind("g=", 0) != 0) bad();
  const auto semi = key.find(';');
  if (semi == std::string::npos) bad();
  int dim = 0;
  try {
    std::size_t used = 0;
    dim = std::stoi(key.substr(2, semi - 2), &used);
    if (used != semi - 2 || dim < 0 || dim > 64) bad();
  } catch (const std::logic_error&) {
    bad();
  }
  std::vector<std::int64_t> values;
  std::string rest = key.substr(semi + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    const std::string field = rest.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(field, &used));
      if (used != field.size()) bad();
    } catch (const std::logic_error&) {
      bad();
    }
    pos = comma + 1;
    if (comma == rest.size()) break;
  }
  if (values.size() != static_cast<std::size_t>(dim) * (dim + 1) / 2) bad();
  return from_upper(dim, values);
}

std::strong_ordering SymMatrix::operator<=>(const SymMatrix& other) const {
  if (auto c = dim_ <=> other.dim_; c != 0) return c;
  if (auto c = trace() <=> other.trace(); c != 0) return c;
  for (int p = 0; p < dim_; ++p)
    if (auto c = (*this)(p, p) <=> other(p, p); c != 0) return c;
  for (int p = 0; p < dim_; ++p)
    for (int q = p + 1; q < dim_; ++q)
      if (auto c = (*this)(p, q) <=> other(p, q); c != 0) return c;
  return std::strong_ordering::equal;
}

bool is_valid_index(const SymMatrix& s) {
  if (s.dim() < 1) return false;
  for (int p = 0; p < s.dim(); ++p) {
    const auto d = s(p, p);
    if (d < 0 || d % 2 != 0) return false;
  }
  return s.is_positive_semidefinite();
}

void require_valid_index(const SymMatrix& s, const char* what) {
  require(is_valid_index(s), ErrorCode::invalid_argument,
          std::string(what) + " must be a symmetric positive semi-definite integer matrix with even "
                              "non-negative diagonal, got " + s.key());
}

}  // namespace siegelwb
