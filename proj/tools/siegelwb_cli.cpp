// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

// Command-line front end. Talks to the library only through the C API.
// Exit codes: 0 success or pass, 1 verification failure, 2 usage error or
// malformed input (an error object is printed on stdout).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "siegelwb/siegelwb.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Handle {
  swb_workbench* wb = nullptr;
  ~Handle() { swb_workbench_destroy(wb); }
};

int print_error(const std::string& code, const std::string& message) {
  std::cout << Json{{"error", code}, {"message", message}}.dump(2) << "\n";
  return kExitError;
}

int print_library_error(swb_status status, const swb_workbench* wb) {
  Json err = Json::parse(swb_last_error(wb), nullptr, false);
  if (err.is_discarded() || !err.is_object() || err.empty())
    err = Json{{"error", swb_status_name(status)}, {"code", static_cast<int>(status)}, {"message", ""}};
  std::cout << err.dump(2) << "\n";
  return kExitError;
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Takes ownership of a library string and prints it.
void print_owned(char* json) {
  std::cout << json << "\n";
  swb_free(json);
}

std::int64_t default_eval_trace(int genus) {
  static const std::map<int, std::int64_t> table{{1, 20}, {2, 8}, {3, 6}};
  auto it = table.find(genus);
  return it == table.end() ? 4 : it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Siegel theta series and Schottky form workbench", "siegelwb"};
  app.require_subcommand(1);

  std::string cache_path;
  unsigned threads = 1;
  bool no_dedup = false;
  bool verify_cache = false;
  bool high_precision = false;
  bool show_stats = false;
  app.add_option("--cache", cache_path, "Count cache file (default: $SIEGELWB_CACHE, else memory only)");
  app.add_option("--threads", threads, "Worker threads for representation counts")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-dedup", no_dedup, "Count every index directly, without reduction or memoization");
  app.add_flag("--verify-cache", verify_cache, "Recompute 1% of cache hits and compare");
  app.add_flag("--high-precision", high_precision, "50-digit arithmetic for evaluations");
  app.add_flag("--stats", show_stats, "Print count hit/miss statistics on stderr");

  std::string lattice = "E8";
  std::string form;
  std::string tau;
  std::string input;
  std::string options_path;
  std::int64_t max_norm = 2;
  std::int64_t max_trace = -1;
  std::int64_t direct_budget = -1;
  int genus = 1;
  bool vectors = false;

  auto* enum_cmd = app.add_subcommand("lattice-enum", "Count (and optionally list) short lattice vectors");
  enum_cmd->add_option("--lattice", lattice, "E8, D16plus or E8x2")->required();
  enum_cmd->add_option("--max-norm", max_norm, "Largest norm (even)");
  enum_cmd->add_flag("--vectors", vectors, "Include the vectors themselves");

  auto* theta_cmd = app.add_subcommand("theta-coeffs", "Fourier coefficients of a theta series");
  theta_cmd->add_option("--lattice", lattice, "E8, D16plus or E8x2")->required();
  theta_cmd->add_option("--genus", genus, "Genus")->required();
  theta_cmd->add_option("--max-trace", max_trace, "Truncation bound on tr(S)")->required();

  auto* phi_cmd = app.add_subcommand("siegel-phi", "Apply the Siegel operator to an expansion document");
  phi_cmd->add_option("--input", input, "Expansion JSON file, or - for stdin")->required();

  auto* schottky_cmd = app.add_subcommand("schottky-verify", "Vanishing (g <= 3) or nonvanishing (g = 4) check");
  schottky_cmd->add_option("--genus", genus, "Genus 1..4")->required();
  schottky_cmd->add_option("--max-trace", max_trace, "Truncation bound on tr(S)")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a truncated expansion at a point");
  auto* lattice_opt = eval_cmd->add_option("--lattice", form, "Theta series of this lattice");
  eval_cmd->add_option("--form", form, "Lattice name or 'schottky'")->excludes(lattice_opt);
  eval_cmd->add_option("--genus", genus, "Genus");
  eval_cmd->add_option("--tau", tau, "Point: complex scalar or JSON matrix")->required();
  eval_cmd->add_option("--max-trace", max_trace, "Truncation bound (default depends on genus)");
  eval_cmd->add_option("--direct-budget", direct_budget, "Also sum the lattice directly up to this total norm");

  std::string fay_form;
  std::string derivative;
  std::optional<double> fay_t;
  auto* fay_cmd = app.add_subcommand("fay-check", "Degeneration checks on a DegenerationData document");
  fay_cmd->add_option("--input", input, "DegenerationData JSON file, or - for stdin")->required();
  fay_cmd->add_option("--options", options_path, "JSON file with check options");
  fay_cmd->add_option("--form", fay_form, "Lattice name or 'schottky' (default E8x2)");
  fay_cmd->add_option("--max-trace", max_trace, "Truncation bound of the genus g+1 expansion");
  fay_cmd->add_option("--derivative", derivative, "Polynomial N in x11, x12, ... (genus g+1)");
  fay_cmd->add_option("--t", fay_t, "Pencil parameter for the reported period matrix");

  auto* stats_cmd = app.add_subcommand("cache-stats", "Summarize the count cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return print_error("usage", e.what());
  }

  Json config{{"threads", threads},
              {"dedup", !no_dedup},
              {"verify_cache", verify_cache},
              {"precision", high_precision ? "high" : "standard"}};
  if (!cache_path.empty()) config["cache_path"] = cache_path;

  Handle handle;
  if (swb_status st = swb_workbench_create(config.dump().c_str(), &handle.wb); st != SWB_OK)
    return print_library_error(st, nullptr);

  {
    char* cs = nullptr;
    if (swb_cache_stats(handle.wb, &cs) == SWB_OK) {
      const Json doc = Json::parse(cs, nullptr, false);
      swb_free(cs);
      if (!doc.is_discarded() && doc.value("rebuilt", false))
        std::cerr << "warning: cache file was corrupt; moved aside and starting empty\n";
    }
  }

  char* out = nullptr;
  int passed = 1;
  swb_status st = SWB_OK;

  if (*enum_cmd) {
    st = swb_lattice_enum(handle.wb, lattice.c_str(), max_norm, vectors ? 1 : 0, &out);
  } else if (*theta_cmd) {
    st = swb_theta_coeffs(handle.wb, lattice.c_str(), genus, max_trace, &out);
  } else if (*phi_cmd) {
    auto text = read_input(input);
    if (!text) return print_error("io-error", "cannot read " + input);
    st = swb_siegel_phi(handle.wb, text->c_str(), &out);
  } else if (*schottky_cmd) {
    st = swb_schottky_verify(handle.wb, genus, max_trace, &out, &passed);
  } else if (*eval_cmd) {
    if (form.empty()) return print_error("usage", "eval needs --lattice or --form");
    if (max_trace < 0) max_trace = default_eval_trace(genus);
    st = swb_eval(handle.wb, form.c_str(), genus, tau.c_str(), max_trace, direct_budget, &out);
    if (st == SWB_OK) {
      const Json doc = Json::parse(out, nullptr, false);
      passed = doc.is_discarded() || doc.value("status", "pass") == "pass" ? 1 : 0;
    }
  } else if (*fay_cmd) {
    auto text = read_input(input);
    if (!text) return print_error("io-error", "cannot read " + input);
    Json options = Json::object();
    if (!options_path.empty()) {
      auto opt_text = read_input(options_path);
      if (!opt_text) return print_error("io-error", "cannot read " + options_path);
      options = Json::parse(*opt_text, nullptr, false);
      if (options.is_discarded() || !options.is_object())
        return print_error("parse-error", "options file is not a JSON object");
    }
    if (!fay_form.empty()) options["form"] = fay_form;
    if (max_trace >= 0) options["max_trace"] = max_trace;
    if (!derivative.empty()) options["derivative"] = derivative;
    if (fay_t) options["t"] = *fay_t;
    st = swb_fay_check(handle.wb, text->c_str(), options.dump().c_str(), &out, &passed);
  } else if (*stats_cmd) {
    st = swb_cache_stats(handle.wb, &out);
  }

  if (st != SWB_OK) return print_library_error(st, handle.wb);
  print_owned(out);

  if (show_stats) {
    char* s = nullptr;
    if (swb_session_stats(handle.wb, &s) == SWB_OK) {
      std::cerr << Json::parse(s).dump() << "\n";
      swb_free(s);
    }
  }
  return passed ? kExitPass : kExitFail;
}
