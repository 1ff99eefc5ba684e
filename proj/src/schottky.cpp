// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/schottky.hpp"

#include "siegelwb/error.hpp"

namespace siegelwb {

namespace {

void require_pair(RepresentationCounter& e8x2, RepresentationCounter& d16plus) {
  require(e8x2.lattice().rank() == 16 && d16plus.lattice().rank() == 16, ErrorCode::invalid_argument,
          "schottky form needs two rank-16 lattices");
}

}  // namespace

FourierExpansion schottky_expansion(RepresentationCounter& e8x2, RepresentationCounter& d16plus,
                                    int genus, std::int64_t max_trace) {
  require_pair(e8x2, d16plus);
  FourierExpansion f(genus, 8, max_trace);
  for (const auto& s : enumerate_indices(genus, max_trace)) f.set(s, e8x2.count(s) - d16plus.count(s));
  return f;
}

VanishingReport verify_vanishing(RepresentationCounter& e8x2, RepresentationCounter& d16plus,
                                 int genus, std::int64_t max_trace) {
  require(genus >= 1 && genus <= 3, ErrorCode::invalid_argument,
          "vanishing holds for genus 1, 2, 3 only");
  require_pair(e8x2, d16plus);
  VanishingReport report;
  report.genus = genus;
  report.max_trace = max_trace;
  for (const auto& s : enumerate_indices(genus, max_trace)) {
    ++report.indices_checked;
    Integer a = e8x2.count(s) - d16plus.count(s);
    if (a == 0) continue;
    if (!report.counterexample) report.counterexample = IndexedCoefficient{s, a};
    report.nonzero.emplace_back(s, std::move(a));
  }
  report.passed = report.nonzero.empty();
  return report;
}

std::optional<IndexedCoefficient> first_nonzero_index(RepresentationCounter& e8x2,
                                                      RepresentationCounter& d16plus,
                                                      std::int64_t max_trace) {
  require_pair(e8x2, d16plus);
  for (const auto& s : enumerate_indices(4, max_trace)) {
    Integer a = e8x2.count(s) - d16plus.count(s);
    if (a != 0) return IndexedCoefficient{s, std::move(a)};
  }
  return std::nullopt;
}

std::vector<IndexedCoefficient> nonzero_coefficients(const FourierExpansion& f) {
  return {f.coefficients().begin(), f.coefficients().end()};
}

}  // namespace siegelwb
