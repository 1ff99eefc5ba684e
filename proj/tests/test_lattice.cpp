// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "siegelwb/error.hpp"
#include "siegelwb/lattice.hpp"

using namespace siegelwb;

namespace {

std::uint64_t count_norm(const std::vector<LatticeVector>& vs, std::int64_t norm) {
  return static_cast<std::uint64_t>(
      std::count_if(vs.begin(), vs.end(), [&](const LatticeVector& v) { return v.norm == norm; }));
}

std::uint64_t sigma(int k, int n) {
  std::uint64_t s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      std::uint64_t p = 1;
      for (int e = 0; e < k; ++e) p *= static_cast<std::uint64_t>(d);
      s += p;
    }
  return s;
}

}  // namespace

TEST_CASE("built-in lattices are even unimodular of the right rank") {
  const Lattice e8 = build_lattice("E8");
  const Lattice d16 = build_lattice("D16plus");
  const Lattice e8x2 = build_lattice("E8x2");
  CHECK(e8.rank() == 8);
  CHECK(d16.rank() == 16);
  CHECK(e8x2.rank() == 16);
  for (const Lattice* l : {&e8, &d16, &e8x2}) {
    CHECK(l->gram().determinant() == 1);
    CHECK(l->gram().has_even_diagonal());
    CHECK(l->gram().is_positive_definite());
  }
  CHECK(e8x2.gram() == e8.gram().direct_sum(e8.gram()));
}

TEST_CASE("Gram determinants against cofactor expansion") {
  const auto rows = build_lattice("E8").gram().rows();
  std::vector<std::vector<long long>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  CHECK(oracle::cofactor_det(m) == 1);
}

TEST_CASE("unknown lattice names are rejected") {
  try {
    build_lattice("Leech");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_lattice);
  }
  const auto names = supported_lattices();
  CHECK(std::find(names.begin(), names.end(), "D16plus") != names.end());
}

TEST_CASE("lattice constructor validates the Gram matrix") {
  CHECK_THROWS_AS(Lattice("odd", SymMatrix::from_rows({{1}})), Error);
  CHECK_THROWS_AS(Lattice("det4", SymMatrix::from_rows({{2, 0}, {0, 2}})), Error);
  CHECK_THROWS_AS(Lattice("indef", SymMatrix::from_rows({{0, 1}, {1, 0}})), Error);
}

TEST_CASE("direct_sum adds ranks and names") {
  const Lattice s = direct_sum(build_lattice("E8"), build_lattice("E8"));
  CHECK(s.rank() == 16);
  CHECK(s.gram().determinant() == 1);
  CHECK(count_vectors_by_norm(s, 2)[1] == 480);
}

TEST_CASE("enumerate_vectors at norm 0 is the zero vector") {
  const auto vs = enumerate_vectors(build_lattice("E8"), 0);
  REQUIRE(vs.size() == 1);
  CHECK(std::all_of(vs[0].coords.begin(), vs[0].coords.end(), [](auto c) { return c == 0; }));
  CHECK(vs[0].norm == 0);
}

TEST_CASE("E8 shells match the coordinate model") {
  const auto model = oracle::e8_vectors(6);
  const auto vs = enumerate_vectors(build_lattice("E8"), 6);
  for (int n : {2, 4, 6}) {
    CAPTURE(n);
    CHECK(count_norm(vs, n) == oracle::with_norm(model, n).size());
  }
  CHECK(count_norm(vs, 2) == 240);
  CHECK(count_norm(vs, 4) == 2160);
}

TEST_CASE("D16plus shells match the coordinate model") {
  const auto counts = count_vectors_by_norm(build_lattice("D16plus"), 4);
  CHECK(counts[1] == oracle::d16plus_vectors(2).size());
  CHECK(counts[2] == oracle::d16plus_vectors(4).size());
  CHECK(counts[1] == 480);
}

TEST_CASE("shell sizes follow the Eisenstein divisor sums") {
  // rank 8: 240 sigma_3(n); rank 16: 480 sigma_7(n)
  const auto e8 = count_vectors_by_norm(build_lattice("E8"), 12);
  for (int n = 1; n <= 6; ++n) CHECK(e8[n] == 240 * sigma(3, n));
  for (const char* name : {"D16plus", "E8x2"}) {
    const auto c = count_vectors_by_norm(build_lattice(name), 8);
    for (int n = 1; n <= 4; ++n) CHECK(c[n] == 480 * sigma(7, n));
  }
}

TEST_CASE("enumeration is sorted, closed under negation and agrees with counting") {
  const Lattice l = build_lattice("E8");
  const auto vs = enumerate_vectors(l, 6);
  std::set<std::vector<std::int64_t>> all;
  for (const auto& v : vs) {
    all.insert(v.coords);
    CHECK(l.norm(v.coords) == v.norm);
  }
  CHECK(all.size() == vs.size());
  for (const auto& v : vs) {
    auto neg = v.coords;
    for (auto& c : neg) c = -c;
    CHECK(all.count(neg) == 1);
  }
  CHECK(std::is_sorted(vs.begin(), vs.end(), [](const LatticeVector& a, const LatticeVector& b) {
    return a.norm != b.norm ? a.norm < b.norm : a.coords < b.coords;
  }));
  const auto counts = count_vectors_by_norm(l, 6);
  for (int k = 0; k <= 3; ++k) CHECK(counts[k] == count_norm(vs, 2 * k));
}

TEST_CASE("visit_vectors streams the same multiset") {
  const Lattice l = build_lattice("D16plus");
  std::vector<std::uint64_t> seen(3, 0);
  visit_vectors(l, 4, [&](std::span<const std::int64_t> x, std::int64_t n) {
    CHECK(l.norm(x) == n);
    ++seen[n / 2];
  });
  CHECK(seen == count_vectors_by_norm(l, 4));
}

TEST_CASE("odd or negative norm bounds are invalid") {
  CHECK_THROWS_AS(enumerate_vectors(build_lattice("E8"), 3), Error);
  CHECK_THROWS_AS(count_vectors_by_norm(build_lattice("E8"), -2), Error);
}
