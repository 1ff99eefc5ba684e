// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/json_io.hpp"

#include "siegelwb/error.hpp"

namespace siegelwb {

namespace {

constexpr const char* kExpansionFormat = "siegelwb.expansion";

[[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::parse_error, what); }

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) malformed(std::string("missing field '") + name + "'");
  return doc.at(name);
}

std::int64_t int_field(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  if (!v.is_number_integer()) malformed(std::string("field '") + name + "' must be an integer");
  return v.get<std::int64_t>();
}

ComplexVector vector_from_json(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  if (!v.is_array()) malformed(std::string("field '") + name + "' must be an array");
  ComplexVector out;
  for (const auto& e : v) out.push_back(complex_from_json(e));
  return out;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

Json coefficient_to_json(const IndexedCoefficient& c) {
  return Json{{"S", index_to_json(c.first)}, {"a", c.second.str()}};
}

const char* status(bool passed) { return passed ? "pass" : "fail"; }

}  // namespace

Json index_to_json(const IndexMatrix& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows()) rows.push_back(r);
  return rows;
}

IndexMatrix index_from_json(const Json& doc, int genus) {
  if (!doc.is_array()) malformed("index must be an array");
  try {
    if (!doc.empty() && doc.front().is_array()) {
      auto rows = doc.get<std::vector<std::vector<std::int64_t>>>();
      require(static_cast<int>(rows.size()) == genus, ErrorCode::invalid_argument, "index has wrong size");
      return SymMatrix::from_rows(rows);
    }
    auto upper = doc.get<std::vector<std::int64_t>>();
    require(static_cast<int>(upper.size()) == genus * (genus + 1) / 2, ErrorCode::invalid_argument,
            "index upper triangle has wrong length");
    return SymMatrix::from_upper(genus, upper);
  } catch (const Json::exception& e) {
    malformed(std::string("index entries must be integers: ") + e.what());
  }
}

Json expansion_to_json(const FourierExpansion& f) {
  Json entries = Json::array();
  for (const auto& [s, a] : f.coefficients()) entries.push_back(Json{{"S", s.upper()}, {"a", a.str()}});
  return Json{{"format", kExpansionFormat},
              {"version", kExpansionFormatVersion},
              {"genus", f.genus()},
              {"weight", f.weight()},
              {"max_trace", f.max_trace()},
              {"entries", entries}};
}

FourierExpansion expansion_from_json(const Json& doc) {
  const Json& format = field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kExpansionFormat)
    malformed(std::string("format must be '") + kExpansionFormat + "'");
  if (int_field(doc, "version") != kExpansionFormatVersion) malformed("unsupported expansion version");
  const std::int64_t genus = int_field(doc, "genus");
  require(genus >= 1 && genus <= 16, ErrorCode::invalid_argument, "genus out of range");
  FourierExpansion f(static_cast<int>(genus), static_cast<int>(int_field(doc, "weight")),
                     int_field(doc, "max_trace"));
  const Json& entries = field(doc, "entries");
  if (!entries.is_array()) malformed("entries must be an array");
  for (const auto& e : entries) {
    const IndexMatrix s = index_from_json(field(e, "S"), f.genus());
    const Json& a = field(e, "a");
    if (a.is_string()) {
      f.set(s, parse_integer(a.get<std::string>()));
    } else if (a.is_number_integer()) {
      f.set(s, Integer(a.get<std::int64_t>()));
    } else {
      malformed("coefficient must be a decimal string or integer");
    }
  }
  return f;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& doc) {
  if (doc.is_number()) return {doc.get<double>(), 0.0};
  if (doc.is_array() && doc.size() == 2 && doc[0].is_number() && doc[1].is_number())
    return {doc[0].get<double>(), doc[1].get<double>()};
  malformed("complex number must be [re, im] or a real number");
}

Json matrix_to_json(const ComplexSymMatrix& m) {
  Json rows = Json::array();
  for (int p = 0; p < m.dim(); ++p) {
    Json row = Json::array();
    for (int q = 0; q < m.dim(); ++q) row.push_back(complex_to_json(m(p, q)));
    rows.push_back(row);
  }
  return rows;
}

Json vanishing_report_to_json(const VanishingReport& report) {
  Json nonzero = Json::array();
  for (const auto& c : report.nonzero) nonzero.push_back(coefficient_to_json(c));
  Json out{{"check", "schottky-vanishing"},
           {"genus", report.genus},
           {"max_trace", report.max_trace},
           {"status", status(report.passed)},
           {"indices_checked", report.indices_checked}};
  out["counterexample"] = report.counterexample ? coefficient_to_json(*report.counterexample) : Json(nullptr);
  out["nonzero"] = nonzero;
  return out;
}

Json limit_report_to_json(const LimitReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) samples.push_back(Json{{"t", s.t}, {"deviation", s.deviation}});
  return Json{{"check", "siegel-limit"},
              {"status", status(report.passed)},
              {"limit", complex_to_json(report.limit)},
              {"tolerance", report.tolerance},
              {"converging", report.converging},
              {"samples", samples}};
}

Json derivative_report_to_json(const DerivativeIdentityReport& report) {
  return Json{{"check", "derivative-identity"},
              {"status", status(report.passed)},
              {"A", complex_to_json(report.direct)},
              {"finite_difference", complex_to_json(report.finite_difference)},
              {"abs_discrepancy", report.abs_discrepancy},
              {"rel_discrepancy", report.rel_discrepancy},
              {"tolerance", report.tolerance}};
}

Json scaling_report_to_json(const ScalingLawReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples)
    samples.push_back(Json{{"lambda", complex_to_json(s.lambda)},
                           {"mu", complex_to_json(s.mu)},
                           {"A", complex_to_json(s.a)},
                           {"ratio", complex_to_json(s.ratio)}});
  return Json{{"check", "scaling-law"},
              {"status", status(report.passed)},
              {"D", complex_to_json(report.d)},
              {"max_rel_spread", report.max_rel_spread},
              {"tolerance", report.tolerance},
              {"samples", samples}};
}

DegenerationData degeneration_from_json(const Json& doc) {
  if (!doc.is_object()) malformed("degeneration data must be an object");
  const std::int64_t genus = int_field(doc, "genus");
  require(genus >= 1 && genus <= 16, ErrorCode::invalid_argument, "genus out of range");
  const Json& tau_doc = field(doc, "tau");
  if (!tau_doc.is_array()) malformed("tau must be an array of rows");
  std::vector<std::vector<Complex>> rows;
  for (const auto& row : tau_doc) {
    if (!row.is_array()) malformed("tau rows must be arrays");
    std::vector<Complex> r;
    for (const auto& e : row) r.push_back(complex_from_json(e));
    rows.push_back(std::move(r));
  }
  require(static_cast<std::int64_t>(rows.size()) == genus, ErrorCode::invalid_argument,
          "tau size does not match genus");
  DegenerationData data{SiegelPoint(ComplexSymMatrix::from_rows(rows)),
                        vector_from_json(doc, "v_a"),
                        vector_from_json(doc, "v_b"),
                        vector_from_json(doc, "aj"),
                        {}};
  if (doc.contains("s")) data.s = vector_from_json(doc, "s");
  if (doc.contains("c1")) data.c1 = complex_from_json(doc.at("c1"));
  if (doc.contains("c2")) data.c2 = complex_from_json(doc.at("c2"));
  if (doc.contains("lambda")) data.lambda = complex_from_json(doc.at("lambda"));
  if (doc.contains("mu")) data.mu = complex_from_json(doc.at("mu"));
  data.validate();
  return data;
}

Json degeneration_to_json(const DegenerationData& data) {
  Json out{{"genus", data.genus()},
           {"tau", matrix_to_json(data.tau.tau())},
           {"v_a", vector_to_json(data.v_a)},
           {"v_b", vector_to_json(data.v_b)},
           {"aj", vector_to_json(data.aj)}};
  if (!data.s.empty()) out["s"] = vector_to_json(data.s);
  out["c1"] = complex_to_json(data.c1);
  out["c2"] = complex_to_json(data.c2);
  out["lambda"] = complex_to_json(data.lambda);
  out["mu"] = complex_to_json(data.mu);
  return out;
}

}  // namespace siegelwb
