// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/representation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <thread>

#include "siegelwb/cache.hpp"
#include "siegelwb/error.hpp"

namespace siegelwb {

namespace {

// Shells at most this large are searched with pairwise inner-product bitsets.
constexpr std::size_t kBitsetShellMax = 4096;

using Count = unsigned __int128;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_sign_representative(std::span<const std::int16_t> v) {
  for (auto c : v)
    if (c != 0) return c > 0;
  return false;
}

// ---------------------------------------------------------------------------
// Bitsets over the vectors of one small shell.

class BitRows {
 public:
  BitRows() = default;
  BitRows(std::size_t rows, std::size_t bits) : words_((bits + 63) / 64), data_(rows * words_, 0) {}

  std::size_t words() const noexcept { return words_; }
  std::uint64_t* row(std::size_t r) noexcept { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const noexcept { return data_.data() + r * words_; }

 private:
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

std::uint64_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t n = 0;
  for (std::size_t w = 0; w < words; ++w) n += std::popcount(a[w] & b[w]);
  return n;
}

// ---------------------------------------------------------------------------
// Depth-first tuple search.
//
// Levels are ordered by decreasing norm. The trailing run of levels sharing
// the smallest norm, when that shell is small and the run has length >= 2,
// is searched with precomputed bitsets {z : (z_i, z) = v}; earlier ("outer")
// levels carry explicit candidate lists filtered by inner products. The first
// level ranges over sign representatives only: negating a whole tuple keeps
// its Gram matrix, so every count at x_1 = v equals the count at x_1 = -v.

class TupleSearch {
 public:
  TupleSearch(ShellStore& store, const GramTarget& s) : rank_(store.lattice().rank()) {
    const int g = s.dim();
    std::vector<int> order(g);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s(a, a) > s(b, b); });
    target_ = SymMatrix(g);
    for (int p = 0; p < g; ++p)
      for (int q = p; q < g; ++q) target_.set(p, q, s(order[p], order[q]));

    for (int p = 0; p < g; ++p) shells_.push_back(&store.shell(target_(p, p)));
    gram_.resize(static_cast<std::size_t>(rank_) * rank_);
    for (int p = 0; p < rank_; ++p)
      for (int q = 0; q < rank_; ++q) gram_[p * rank_ + q] = store.lattice().gram()(p, q);

    inner_begin_ = g;
    const auto last_norm = target_(g - 1, g - 1);
    int run = 0;
    for (int p = g - 1; p >= 0 && target_(p, p) == last_norm; --p) ++run;
    if (run >= 2 && shells_.back()->size() <= kBitsetShellMax) {
      inner_begin_ = g - run;
      build_inner_table();
    }
  }

  Count run(unsigned threads) const {
    const int g = target_.dim();
    const Shell& top = *shells_[0];
    if (g == 1) return top.size();
    std::vector<std::uint32_t> reps;
    const bool signed_top = target_(0, 0) > 0;
    for (std::size_t i = 0; i < top.size(); ++i)
      if (!signed_top || is_sign_representative(top.at(i))) reps.push_back(static_cast<std::uint32_t>(i));
    const Count weight = signed_top ? 2 : 1;

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps.size())));
    std::vector<Count> partial(threads, 0);
    auto work = [&](unsigned t) {
      Worker w(*this);
      Count acc = 0;
      for (std::size_t k = t; k < reps.size(); k += threads) acc += w.from_top(reps[k]);
      partial[t] = acc;
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    Count total = 0;
    for (auto c : partial) total += c;
    return total * weight;
  }

 private:
  struct Worker {
    explicit Worker(const TupleSearch& search) : s(search) {
      const int g = s.target_.dim();
      cand.assign(g + 1, std::vector<std::vector<std::uint32_t>>(g));
      if (s.inner_begin_ < g) bits.assign(g + 1, BitRows(g, s.inner_size_));
      dual.resize(s.rank_);
      inner_ip.resize(s.inner_size_);
    }

    Count from_top(std::uint32_t idx) {
      const int g = s.target_.dim();
      if (s.inner_begin_ == 0) {
        // All levels share one small shell.
        for (int r = 1; r < g; ++r) copy_row(bits[1].row(r), s.table_row(idx, s.target_(0, r)));
        return inner_count(1);
      }
      for (int q = 1; q < s.inner_begin_; ++q) {
        auto& c = cand[0][q];
        c.resize(s.shells_[q]->size());
        std::iota(c.begin(), c.end(), 0u);
      }
      if (s.inner_begin_ < g)
        for (int q = s.inner_begin_; q < g; ++q) fill_ones(bits[0].row(q));
      return choose_outer(0, idx);
    }

    // x_p fixed to shell_p[idx]; depth p's candidates already satisfy levels < p.
    Count choose_outer(int p, std::uint32_t idx) {
      const int g = s.target_.dim();
      set_dual(s.shells_[p]->at(idx));
      const int next = p + 1;
      for (int q = next; q < s.inner_begin_; ++q) {
        const auto want = s.target_(p, q);
        const Shell& sh = *s.shells_[q];
        auto& out = cand[next][q];
        out.clear();
        for (auto y : cand[p][q])
          if (dot(sh.at(y)) == want) out.push_back(y);
        if (out.empty()) return 0;
      }
      if (s.inner_begin_ < g) {
        const Shell& z = *s.shells_[s.inner_begin_];
        for (std::size_t i = 0; i < s.inner_size_; ++i) inner_ip[i] = dot(z.at(i));
        for (int q = s.inner_begin_; q < g; ++q) {
          const auto want = s.target_(p, q);
          std::uint64_t* dst = bits[next].row(q);
          const std::uint64_t* src = bits[p].row(q);
          const std::size_t words = bits[next].words();
          for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t m = 0;
            const std::size_t base = w * 64;
            const std::size_t lim = std::min<std::size_t>(64, s.inner_size_ - base);
            for (std::size_t b = 0; b < lim; ++b) m |= std::uint64_t(inner_ip[base + b] == want) << b;
            dst[w] = src[w] & m;
          }
        }
      }
      if (next == s.inner_begin_) {
        if (next == g) return 1;
        // carry outer-filtered bitsets into the inner search at depth `next`
        return inner_count(next);
      }
      if (next == g - 1) return cand[next][next].size();
      Count acc = 0;
      // dual is overwritten below; candidates for level `next` are stable.
      const auto& choices = cand[next][next];
      for (std::size_t k = 0; k < choices.size(); ++k) acc += choose_outer(next, choices[k]);
      return acc;
    }

    // Levels q..g-1 are inner; bits[q].row(r) holds candidates for r >= q.
    Count inner_count(int q) {
      const int g = s.target_.dim();
      const std::size_t words = bits[q].words();
      if (q == g - 1) {
        std::uint64_t n = 0;
        const std::uint64_t* row = bits[q].row(q);
        for (std::size_t w = 0; w < words; ++w) n += std::popcount(row[w]);
        return n;
      }
      Count acc = 0;
      const std::uint64_t* mine = bits[q].row(q);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = mine[w];
        while (word) {
          const auto i = static_cast<std::uint32_t>(w * 64 + std::countr_zero(word));
          word &= word - 1;
          if (q + 1 == g - 1) {
            acc += popcount_and(bits[q].row(g - 1), s.table_row(i, s.target_(q, g - 1)), words);
            continue;
          }
          bool empty = false;
          for (int r = q + 1; r < g; ++r) {
            const std::uint64_t* t = s.table_row(i, s.target_(q, r));
            const std::uint64_t* src = bits[q].row(r);
            std::uint64_t* dst = bits[q + 1].row(r);
            std::uint64_t any = 0;
            for (std::size_t v = 0; v < words; ++v) any |= (dst[v] = src[v] & t[v]);
            if (!any) {
              empty = true;
              break;
            }
          }
          if (!empty) acc += inner_count(q + 1);
        }
      }
      return acc;
    }

    void set_dual(std::span<const std::int16_t> x) {
      for (int k = 0; k < s.rank_; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j < s.rank_; ++j) acc += s.gram_[k * s.rank_ + j] * x[j];
        dual[k] = acc;
      }
    }
    std::int64_t dot(std::span<const std::int16_t> y) const {
      std::int64_t acc = 0;
      for (int k = 0; k < s.rank_; ++k) acc += dual[k] * y[k];
      return acc;
    }
    void fill_ones(std::uint64_t* row) const {
      const std::size_t words = (s.inner_size_ + 63) / 64;
      for (std::size_t w = 0; w < words; ++w) {
        const std::size_t lim = std::min<std::size_t>(64, s.inner_size_ - w * 64);
        row[w] = lim == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << lim) - 1);
      }
    }
    void copy_row(std::uint64_t* dst, const std::uint64_t* src) const {
      std::copy(src, src + (s.inner_size_ + 63) / 64, dst);
    }

    const TupleSearch& s;
    std::vector<std::vector<std::vector<std::uint32_t>>> cand;  // [depth][level]
    std::vector<BitRows> bits;                                 // [depth] rows per level
    std::vector<std::int64_t> dual;
    std::vector<std::int64_t> inner_ip;
  };

  void build_inner_table() {
    const Shell& z = *shells_[inner_begin_];
    inner_size_ = z.size();
    const int g = target_.dim();
    for (int p = inner_begin_; p < g; ++p)
      for (int q = p + 1; q < g; ++q) {
        const auto v = target_(p, q);
        if (std::find(values_.begin(), values_.end(), v) == values_.end()) values_.push_back(v);
      }
    table_ = BitRows(inner_size_ * values_.size(), inner_size_);
    std::vector<std::int64_t> dual(rank_);
    for (std::size_t i = 0; i < inner_size_; ++i) {
      auto x = z.at(i);
      for (int k = 0; k < rank_; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j < rank_; ++j) acc += gram_[k * rank_ + j] * x[j];
        dual[k] = acc;
      }
      for (std::size_t j = 0; j < inner_size_; ++j) {
        auto y = z.at(j);
        std::int64_t ip = 0;
        for (int k = 0; k < rank_; ++k) ip += dual[k] * y[k];
        for (std::size_t v = 0; v < values_.size(); ++v)
          if (ip == values_[v]) table_.row(i * values_.size() + v)[j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  const std::uint64_t* table_row(std::uint32_t i, std::int64_t value) const {
    const auto it = std::find(values_.begin(), values_.end(), value);
    return table_.row(i * values_.size() + static_cast<std::size_t>(it - values_.begin()));
  }

  int rank_;
  GramTarget target_;
  std::vector<const Shell*> shells_;
  std::vector<std::int64_t> gram_;
  int inner_begin_ = 0;
  std::size_t inner_size_ = 0;
  std::vector<std::int64_t> values_;
  BitRows table_;
};

}  // namespace

// ---------------------------------------------------------------------------

ShellStore::ShellStore(Lattice lattice) : lattice_(std::move(lattice)) {}

const Shell& ShellStore::shell(std::int64_t norm) {
  require(norm >= 0 && norm % 2 == 0, ErrorCode::invalid_argument,
          "shell norm must be even and non-negative");
  std::lock_guard lock(mutex_);
  if (auto it = shells_.find(norm); it != shells_.end()) return *it->second;
  materialize_up_to(norm);
  return *shells_.at(norm);
}

std::uint64_t ShellStore::shell_size(std::int64_t norm) {
  require(norm >= 0 && norm % 2 == 0, ErrorCode::invalid_argument,
          "shell norm must be even and non-negative");
  std::lock_guard lock(mutex_);
  if (auto it = shells_.find(norm); it != shells_.end()) return it->second->size();
  const auto slot = static_cast<std::size_t>(norm / 2);
  if (slot >= sizes_.size()) sizes_ = count_vectors_by_norm(lattice_, norm);
  return sizes_[slot];
}

void ShellStore::materialize_up_to(std::int64_t norm) {
  const int rank = lattice_.rank();
  std::map<std::int64_t, std::unique_ptr<Shell>> fresh;
  for (std::int64_t n = 0; n <= norm; n += 2) {
    if (shells_.count(n)) continue;
    auto sh = std::make_unique<Shell>();
    sh->norm = n;
    sh->rank = rank;
    fresh.emplace(n, std::move(sh));
  }
  visit_vectors(lattice_, norm, [&](std::span<const std::int64_t> x, std::int64_t n) {
    auto it = fresh.find(n);
    if (it == fresh.end()) return;
    for (auto c : x) {
      require(c >= INT16_MIN && c <= INT16_MAX, ErrorCode::internal,
              "lattice coordinate exceeds the 16-bit shell storage");
      it->second->coords.push_back(static_cast<std::int16_t>(c));
    }
  });
  for (auto& [n, sh] : fresh) {
    const std::size_t count = sh->size();
    std::vector<std::size_t> perm(count);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      auto va = sh->at(a);
      auto vb = sh->at(b);
      return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    });
    std::vector<std::int16_t> sorted;
    sorted.reserve(sh->coords.size());
    for (auto i : perm) {
      auto v = sh->at(i);
      sorted.insert(sorted.end(), v.begin(), v.end());
    }
    sh->coords = std::move(sorted);
    shells_.emplace(n, std::move(sh));
  }
}

// ---------------------------------------------------------------------------

GramTarget canonical_form(const GramTarget& s) {
  const int g = s.dim();
  if (g <= 1) return s;
  std::vector<int> perm(g);
  std::iota(perm.begin(), perm.end(), 0);
  GramTarget best = s;
  bool have = false;
  GramTarget candidate(g);
  do {
    bool sorted = true;
    for (int p = 0; p + 1 < g && sorted; ++p) sorted = s(perm[p], perm[p]) <= s(perm[p + 1], perm[p + 1]);
    if (!sorted) continue;
    // Flipping every sign is the identity, so the first basis vector keeps its sign.
    const std::uint32_t flips = 1u << (g - 1);
    for (std::uint32_t mask = 0; mask < flips; ++mask) {
      for (int p = 0; p < g; ++p)
        for (int q = p; q < g; ++q) {
          const bool neg = (((mask << 1) >> p) ^ ((mask << 1) >> q)) & 1u;
          const auto v = s(perm[p], perm[q]);
          candidate.set(p, q, neg ? -v : v);
        }
      if (!have || candidate < best) {
        best = candidate;
        have = true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// Primitive integer vector in the kernel of a singular form.
std::vector<std::int64_t> primitive_kernel_vector(const GramTarget& m) {
  const int n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) a[p][q] = m(p, q);
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[row][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> v(n, 0);
  v[free_col] = 1;
  for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
    v[pivot_col[r]] = -a[r][free_col] / a[r][pivot_col[r]];
  Integer lcm = 1;
  for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(x)));
  Integer gcd = 0;
  std::vector<Integer> iv(n);
  for (int k = 0; k < n; ++k) {
    iv[k] = boost::multiprecision::numerator(v[k]) * (lcm / boost::multiprecision::denominator(v[k]));
    gcd = boost::multiprecision::gcd(gcd, iv[k]);
  }
  std::vector<std::int64_t> out(n);
  for (int k = 0; k < n; ++k) out[k] = static_cast<std::int64_t>(iv[k] / gcd);
  return out;
}

// Re-bases a singular psd form so that the kernel vector `v` becomes a basis
// vector, whose row and column are then zero.
void split_kernel_vector(GramTarget& m, std::vector<std::int64_t> v) {
  const int n = m.dim();
  for (;;) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (v[k] != 0 && (i < 0 || std::abs(v[k]) < std::abs(v[i]))) i = k;
    bool single = true;
    for (int j = 0; j < n; ++j) {
      if (j == i || v[j] == 0) continue;
      single = false;
      // b_i <- b_i + k b_j keeps v in the new coordinates with v_j - k v_i.
      const std::int64_t k = v[j] / v[i];
      v[j] -= k * v[i];
      const auto sii = m(i, i) + 2 * k * m(i, j) + k * k * m(j, j);
      for (int r = 0; r < n; ++r)
        if (r != i) m.set(i, r, m(i, r) + k * m(j, r));
      m.set(i, i, sii);
    }
    if (single) return;
  }
}

}  // namespace

ReducedTarget reduce_target(const GramTarget& s) {
  GramTarget m = s;
  for (;;) {
    bool changed = false;
    for (int p = 0; p < m.dim(); ++p) {
      if (m(p, p) != 0) continue;
      for (int q = 0; q < m.dim(); ++q)
        if (m(p, q) != 0) return {canonical_form(s), true};
      m = m.remove_index(p);
      changed = true;
      break;
    }
    if (changed) continue;
    for (int p = 0; p < m.dim() && !changed; ++p) {
      const auto spp = m(p, p);
      for (int q = 0; q < m.dim(); ++q) {
        if (q == p) continue;
        const auto spq = m(p, q);
        if (2 * std::abs(spq) <= spp) continue;
        // x_q <- x_q - k x_p with k the nearest integer to spq / spp
        const auto k = floor_div(2 * spq + spp, 2 * spp);
        const auto sqq = m(q, q) - 2 * k * spq + k * k * spp;
        for (int r = 0; r < m.dim(); ++r)
          if (r != q) m.set(q, r, m(q, r) - k * m(p, r));
        m.set(q, q, sqq);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    if (m.dim() > 0 && m.determinant() == 0) {
      split_kernel_vector(m, primitive_kernel_vector(m));
      continue;
    }
    break;
  }
  return {canonical_form(m), false};
}

// ---------------------------------------------------------------------------

RepresentationCounter::RepresentationCounter(Lattice lattice, CountOptions options,
                                             std::shared_ptr<CountCache> cache)
    : shells_(std::move(lattice)), options_(options), cache_(std::move(cache)) {
  if (!cache_) cache_ = std::make_shared<CountCache>();
}

namespace {

// Targets need a positive dimension and an even non-negative diagonal; an
// indefinite target is legal and simply has no representations.
void require_countable(const GramTarget& s) {
  bool ok = s.dim() >= 1;
  for (int p = 0; ok && p < s.dim(); ++p) ok = s(p, p) >= 0 && s(p, p) % 2 == 0;
  require(ok, ErrorCode::invalid_argument,
          "Gram target must have positive size and an even non-negative diagonal, got " + s.key());
}

}  // namespace

Integer RepresentationCounter::count(const GramTarget& s) {
  require_countable(s);
  if (!s.is_positive_semidefinite()) {
    std::lock_guard lock(stats_mutex_);
    ++stats_.calls;
    ++stats_.misses;
    return 0;
  }
  std::string key;
  ReducedTarget reduced;
  if (options_.dedup) {
    reduced = reduce_target(s);
    key = reduced.form.dim() == 0 ? std::string("g=0;") : reduced.form.key();
  } else {
    key = s.key();
  }
  auto compute = [&]() -> Integer {
    if (!options_.dedup) return count_direct(s, options_.threads);
    if (reduced.vanishes) return 0;
    if (reduced.form.dim() == 0) return 1;
    return compute_reduced(reduced.form);
  };

  const std::string& lattice_id = lattice().name();
  if (auto hit = cache_->get(lattice_id, key)) {
    std::uint64_t hit_number = 0;
    {
      std::lock_guard lock(stats_mutex_);
      ++stats_.calls;
      hit_number = ++stats_.hits;
    }
    if (options_.verify_cache && hit_number % 100 == 1) {
      const Integer fresh = compute();
      {
        std::lock_guard lock(stats_mutex_);
        ++stats_.verified;
      }
      require(fresh == *hit, ErrorCode::cache_mismatch,
              "cached count for " + lattice_id + " " + key + " is " + hit->str() +
                  " but recomputation gives " + fresh.str());
    }
    return *hit;
  }
  Integer value = compute();
  cache_->put({lattice_id, key, value, kEngineVersion});
  std::lock_guard lock(stats_mutex_);
  ++stats_.calls;
  ++stats_.misses;
  return value;
}

Integer RepresentationCounter::compute_reduced(const GramTarget& form) {
  if (form.dim() == 1) return shells_.shell_size(form(0, 0));
  if (form.dim() == 2) {
    const auto n1 = form(0, 0);
    const auto n2 = form(1, 1);
    const auto& hist = pair_histogram(n1, n2);
    const auto bound = static_cast<std::int64_t>(hist.size() / 2);
    const auto v = form(0, 1);
    if (v < -bound || v > bound) return 0;
    return hist[static_cast<std::size_t>(v + bound)];
  }
  return from_u128(TupleSearch(shells_, form).run(options_.threads));
}

namespace {

// Shell coordinates column by column, so a dot product with a fixed dual
// vector runs across many vectors at once.
struct Columns {
  int rank = 0;
  std::size_t size = 0;
  std::vector<std::uint16_t> data;  // rank x size

  explicit Columns(const Shell& shell) : rank(shell.rank), size(shell.size()), data(shell.coords.size()) {
    for (std::size_t j = 0; j < size; ++j)
      for (int k = 0; k < rank; ++k) data[k * size + j] = static_cast<std::uint16_t>(shell.coords[j * rank + k]);
  }
};

// Adds 2 to h[<dual, y> + bound] for every shell vector y. The sums wrap
// modulo 2^16; inner products here are far below 2^15 in absolute value, so
// the wrapped result is exact.
__attribute__((target_clones("avx2", "default"))) void histogram_row(const std::int32_t* dual,
                                                                      const Columns& cols, std::int64_t bound,
                                                                      std::uint64_t* h) {
  constexpr std::size_t kChunk = 1024;
  std::uint16_t acc[kChunk];
  std::uint32_t tally[2][256] = {};
  for (std::size_t start = 0; start < cols.size; start += kChunk) {
    const std::size_t len = std::min(kChunk, cols.size - start);
    for (std::size_t j = 0; j < len; ++j) acc[j] = 0;
    for (int k = 0; k < cols.rank; ++k) {
      const auto d = static_cast<std::uint16_t>(dual[k]);
      if (d == 0) continue;
      const std::uint16_t* col = cols.data.data() + k * cols.size + start;
      for (std::size_t j = 0; j < len; ++j)
        acc[j] = static_cast<std::uint16_t>(acc[j] + static_cast<std::uint32_t>(d) * col[j]);
    }
    std::size_t j = 0;
    for (; j + 2 <= len; j += 2) {
      ++tally[0][static_cast<std::int16_t>(acc[j]) + bound];
      ++tally[1][static_cast<std::int16_t>(acc[j + 1]) + bound];
    }
    for (; j < len; ++j) ++tally[0][static_cast<std::int16_t>(acc[j]) + bound];
  }
  for (std::int64_t b = 0; b <= 2 * bound; ++b) h[b] += 2 * (static_cast<std::uint64_t>(tally[0][b]) + tally[1][b]);
}

}  // namespace

const std::vector<std::uint64_t>& RepresentationCounter::pair_histogram(std::int64_t n1,
                                                                         std::int64_t n2) {
  std::lock_guard lock(histogram_mutex_);
  const auto key = std::make_pair(n1, n2);
  if (auto it = histograms_.find(key); it != histograms_.end()) return it->second;

  // Outer loop over the smaller shell, sign representatives only.
  const Shell& a = shells_.shell(n1);
  const Shell& b = shells_.shell(n2);
  const Shell& outer = a.size() <= b.size() ? a : b;
  const Shell& inner = a.size() <= b.size() ? b : a;
  const auto bound = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n1 * n2)) + 1e-9));
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(2 * bound + 1), 0);
  const int rank = lattice().rank();
  std::vector<std::int64_t> gram(static_cast<std::size_t>(rank) * rank);
  for (int p = 0; p < rank; ++p)
    for (int q = 0; q < rank; ++q) gram[p * rank + q] = lattice().gram()(p, q);

  require(bound < 127, ErrorCode::invalid_argument, "norms too large for the pair histogram");
  const Columns columns(inner);
  const unsigned threads = std::max(1u, options_.threads);
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(hist.size(), 0));
  auto work = [&](unsigned t) {
    std::vector<std::int32_t> dual(rank);
    auto& h = partial[t];
    std::size_t seen = 0;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      auto x = outer.at(i);
      if (!is_sign_representative(x)) continue;
      if (seen++ % threads != t) continue;
      for (int k = 0; k < rank; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j < rank; ++j) acc += gram[k * rank + j] * x[j];
        dual[k] = static_cast<std::int32_t>(acc);
      }
      histogram_row(dual.data(), columns, bound, h.data());
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& h : partial)
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += h[i];
  return histograms_.emplace(key, std::move(hist)).first->second;
}

Integer RepresentationCounter::count_direct(const GramTarget& s, unsigned threads) {
  require_countable(s);
  if (!s.is_positive_semidefinite()) return 0;
  return from_u128(TupleSearch(shells_, s).run(std::max(1u, threads)));
}

CountStats RepresentationCounter::stats() const {
  std::lock_guard lock(stats_mutex_);
  return stats_;
}

void RepresentationCounter::reset_stats() {
  std::lock_guard lock(stats_mutex_);
  stats_ = {};
}

}  // namespace siegelwb
