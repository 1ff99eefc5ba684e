// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/commands.hpp"

#include <cmath>

#include "siegelwb/error.hpp"
#include "siegelwb/lattice.hpp"
#include "siegelwb/tau_parser.hpp"
#include "siegelwb/theta.hpp"

namespace siegelwb::commands {

namespace {

// Two-path agreement threshold for eval's direct cross-check.
constexpr double kEvalAgreement = 1e-8;

const char* status(bool passed) { return passed ? "pass" : "fail"; }

void require_genus(int genus) {
  require(genus >= 1 && genus <= 8, ErrorCode::invalid_argument, "genus must lie in 1..8");
}

void require_trace(std::int64_t max_trace) {
  require(max_trace >= 0 && max_trace <= 64, ErrorCode::invalid_argument, "max_trace must lie in 0..64");
}

template <class T>
T option(const Json& options, const char* name, T fallback) {
  if (!options.is_object() || !options.contains(name) || options.at(name).is_null()) return fallback;
  try {
    return options.at(name).get<T>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse_error, std::string("option '") + name + "' has the wrong type");
  }
}

std::vector<std::pair<Complex, Complex>> lambda_mu_pairs(const Json& options) {
  std::vector<std::pair<Complex, Complex>> pairs;
  if (!options.is_object() || !options.contains("lambda_mu")) {
    pairs = {{{1, 0}, {1, 0}}, {{2, 0}, {1, 0}}, {{1, 0}, {3, 0}}, {{-1, 0}, {2, 0}}};
    return pairs;
  }
  const Json& list = options.at("lambda_mu");
  if (!list.is_array() || list.empty()) fail(ErrorCode::parse_error, "lambda_mu must be a nonempty array");
  for (const auto& p : list) {
    if (!p.is_array() || p.size() != 2) fail(ErrorCode::parse_error, "lambda_mu entries must be pairs");
    pairs.emplace_back(complex_from_json(p[0]), complex_from_json(p[1]));
  }
  return pairs;
}

double relative(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

Outcome lattice_enum(Workbench& wb, const std::string& lattice, std::int64_t max_norm, bool include_vectors) {
  require(max_norm >= 0 && max_norm <= 16, ErrorCode::invalid_argument, "max_norm must lie in 0..16");
  const Lattice& l = wb.counter(lattice).lattice();
  Json counts = Json::array();
  const auto by_norm = count_vectors_by_norm(l, max_norm);
  for (std::size_t k = 0; k < by_norm.size(); ++k)
    counts.push_back(Json{{"norm", 2 * k}, {"count", by_norm[k]}});
  Json doc{{"command", "lattice-enum"},
           {"lattice", l.name()},
           {"rank", l.rank()},
           {"gram", index_to_json(l.gram())},
           {"max_norm", max_norm},
           {"counts", counts}};
  if (include_vectors) {
    Json vectors = Json::array();
    for (const auto& v : enumerate_vectors(l, max_norm))
      vectors.push_back(Json{{"norm", v.norm}, {"coords", v.coords}});
    doc["vectors"] = vectors;
  }
  return {doc, true};
}

Outcome theta_coeffs(Workbench& wb, const std::string& lattice, int genus, std::int64_t max_trace) {
  require_genus(genus);
  require_trace(max_trace);
  const FourierExpansion f = wb.form(lattice, genus, max_trace);
  return {Json{{"command", "theta-coeffs"}, {"lattice", lattice}, {"expansion", expansion_to_json(f)}}, true};
}

Outcome siegel_phi(const Json& expansion) {
  const Json& body = expansion.is_object() && expansion.contains("expansion") ? expansion.at("expansion") : expansion;
  const FourierExpansion phi = siegel_operator(expansion_from_json(body));
  return {Json{{"command", "siegel-phi"}, {"expansion", expansion_to_json(phi)}}, true};
}

Outcome schottky_verify(Workbench& wb, int genus, std::int64_t max_trace) {
  require_trace(max_trace);
  require(genus >= 1 && genus <= 4, ErrorCode::invalid_argument, "genus must lie in 1..4");
  if (genus <= 3) {
    const auto report = verify_vanishing(wb.counter("E8x2"), wb.counter("D16plus"), genus, max_trace);
    Json doc{{"command", "schottky-verify"}};
    doc.update(vanishing_report_to_json(report));
    return {doc, report.passed};
  }
  // Genus 4: the form must not vanish; success is a nonzero coefficient.
  const auto first = first_nonzero_index(wb.counter("E8x2"), wb.counter("D16plus"), max_trace);
  Json doc{{"command", "schottky-verify"},
           {"check", "schottky-nonvanishing"},
           {"genus", genus},
           {"max_trace", max_trace},
           {"status", status(first.has_value())}};
  doc["first_nonzero"] =
      first ? Json{{"S", index_to_json(first->first)}, {"a", first->second.str()}} : Json(nullptr);
  return {doc, first.has_value()};
}

Outcome eval(Workbench& wb, const std::string& form, int genus, const std::string& tau, std::int64_t max_trace,
             std::int64_t direct_budget) {
  require_genus(genus);
  require_trace(max_trace);
  const SiegelPoint point(parse_tau(tau, genus));
  const FourierExpansion f = wb.form(form, genus, max_trace);
  const Evaluation e = evaluate(f, point, wb.config().precision);
  Json doc{{"command", "eval"},
           {"form", form},
           {"genus", genus},
           {"max_trace", max_trace},
           {"tau", matrix_to_json(point.tau())},
           {"value", complex_to_json(e.value)},
           {"tail_estimate", e.tail_estimate}};
  bool passed = true;
  if (direct_budget >= 0) {
    const std::int64_t limit = genus == 1 ? 40 : 16;
    require(direct_budget % 2 == 0 && direct_budget <= limit, ErrorCode::invalid_argument,
            "direct budget must be even and at most " + std::to_string(limit));
    DirectThetaValue direct;
    if (form == "schottky") {
      const auto x = theta_eval(wb.counter("E8x2").lattice(), genus, point, direct_budget);
      const auto y = theta_eval(wb.counter("D16plus").lattice(), genus, point, direct_budget);
      direct = {x.value - y.value, x.tail_estimate + y.tail_estimate, x.tuples + y.tuples};
    } else {
      direct = theta_eval(wb.counter(form).lattice(), genus, point, direct_budget);
    }
    const double rel = relative(e.value, direct.value);
    passed = rel <= kEvalAgreement;
    doc["direct"] = Json{{"norm_budget", direct_budget},
                         {"value", complex_to_json(direct.value)},
                         {"tail_estimate", direct.tail_estimate},
                         {"tuples", direct.tuples},
                         {"rel_discrepancy", rel},
                         {"tolerance", kEvalAgreement}};
    doc["status"] = status(passed);
  }
  return {doc, passed};
}

Outcome fay_check(Workbench& wb, const Json& degeneration, const Json& options) {
  const DegenerationData data = degeneration_from_json(degeneration);
  const int g = data.genus();
  const Precision precision = wb.config().precision;
  const auto form = option<std::string>(options, "form", "E8x2");
  const auto max_trace = option<std::int64_t>(options, "max_trace", 6);
  require_trace(max_trace);
  const auto tol_derivative = option<double>(options, "tolerance_derivative", 1e-6);
  const auto tol_scaling = option<double>(options, "tolerance_scaling", 1e-9);
  const auto step = option<double>(options, "step", precision == Precision::high ? 1e-6 : 1e-4);
  const auto t = option<double>(options, "t", 1e-3);
  const DerivativePolynomial n_next =
      DerivativePolynomial::parse(option<std::string>(options, "derivative", "1"), g + 1);
  const DerivativePolynomial n = n_next.restrict_to_leading(g);

  const FourierExpansion f_next = wb.form(form, g + 1, max_trace);
  const FourierExpansion f = siegel_operator(f_next);

  ComplexVector va(g), vb(g);
  for (int p = 0; p < g; ++p) {
    va[p] = data.lambda * data.v_a[p];
    vb[p] = data.mu * data.v_b[p];
  }
  const ComplexSymMatrix sigma = sigma_matrix(va, vb);

  const auto identity = derivative_identity_check(f, n, data.tau, sigma, tol_derivative, step, precision);
  const auto scaling = scaling_law_check(f, n, data.tau, data.v_a, data.v_b, lambda_mu_pairs(options), tol_scaling);
  const auto limit = siegel_limit_check(f_next, data.tau, {2.0, 5.0, 10.0, 20.0}, 1e-10);

  const Complex a = coefficient_A(f, n, data.tau, sigma, precision);
  const Complex b = coefficient_B(f_next, n_next, data.tau, data.aj, precision);
  const Complex gamma1 = std::exp(data.c1);
  const ComplexSymMatrix period = period_matrix_first_order(data, Complex(t, 0.0));

  const bool passed = identity.passed && scaling.passed && limit.passed;
  Json limit_doc = limit_report_to_json(limit);
  limit_doc["check"] = "phi-compatibility";
  Json doc{{"command", "fay-check"},
           {"form", form},
           {"genus", g},
           {"max_trace", max_trace},
           {"derivative", n_next.to_string()},
           {"status", status(passed)},
           {"sigma", matrix_to_json(sigma)},
           {"A", complex_to_json(a)},
           {"B", complex_to_json(b)},
           {"gamma1", complex_to_json(gamma1)},
           {"t_coefficient", complex_to_json(a + gamma1 * b)},
           {"period_matrix", Json{{"t", t}, {"matrix", matrix_to_json(period)}}},
           {"checks", Json::array({derivative_report_to_json(identity), scaling_report_to_json(scaling), limit_doc})}};
  return {doc, passed};
}

Outcome cache_stats(Workbench& wb) {
  const auto cache = wb.cache();
  const CacheFileStats fs = cache->file_stats();
  Json per_lattice = Json::object();
  for (const auto& [name, count] : fs.per_lattice) per_lattice[name] = count;
  Json doc{{"command", "cache-stats"},
           {"engine_version", kEngineVersion},
           {"path", cache->path() ? Json(cache->path()->string()) : Json(nullptr)},
           {"records", fs.records},
           {"foreign_records", fs.foreign_records},
           {"per_lattice", per_lattice},
           {"rebuilt", fs.rebuilt},
           {"entries_in_memory", cache->size()}};
  return {doc, true};
}

Outcome session_stats(Workbench& wb) {
  const CountStats s = wb.stats();
  return {Json{{"calls", s.calls}, {"hits", s.hits}, {"misses", s.misses}, {"verified", s.verified}}, true};
}

}  // namespace siegelwb::commands
