// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The siegelwb Authors

#include "siegelwb/siegelwb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "siegelwb/commands.hpp"
#include "siegelwb/error.hpp"

struct swb_workbench {
  std::unique_ptr<siegelwb::Workbench> wb;
  std::string last_error = "{}";
};

namespace {

using siegelwb::ErrorCode;
using siegelwb::Json;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string error_json(ErrorCode code, const std::string& message) {
  return Json{{"error", siegelwb::error_code_name(code)}, {"code", static_cast<int>(code)}, {"message", message}}
      .dump();
}

// Runs `body`, mapping exceptions to status codes and the handle's last error.
template <class Body>
swb_status guarded(swb_workbench* handle, Body&& body) {
  ErrorCode code = ErrorCode::internal;
  std::string message;
  try {
    if (handle == nullptr || !handle->wb) return SWB_ERR_INVALID_ARGUMENT;
    body(*handle->wb);
    handle->last_error = "{}";
    return SWB_OK;
  } catch (const siegelwb::Error& e) {
    code = e.code();
    message = e.what();
  } catch (const Json::exception& e) {
    code = ErrorCode::parse_error;
    message = e.what();
  } catch (const std::bad_alloc&) {
    message = "out of memory";
  } catch (const std::exception& e) {
    message = e.what();
  } catch (...) {
    message = "unknown error";
  }
  try {
    handle->last_error = error_json(code, message);
  } catch (...) {
  }
  return static_cast<swb_status>(code);
}

Json parse_json(const char* text, const char* what) {
  if (text == nullptr) siegelwb::fail(ErrorCode::invalid_argument, std::string(what) + " is null");
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    siegelwb::fail(ErrorCode::parse_error, std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::string text(const char* s, const char* what) {
  if (s == nullptr) siegelwb::fail(ErrorCode::invalid_argument, std::string(what) + " is null");
  return s;
}

void emit(const siegelwb::commands::Outcome& outcome, char** out_json, int* passed) {
  if (out_json == nullptr) siegelwb::fail(ErrorCode::invalid_argument, "output pointer is null");
  *out_json = duplicate(outcome.document.dump(2));
  if (passed != nullptr) *passed = outcome.passed ? 1 : 0;
}

siegelwb::WorkbenchConfig config_from_json(const Json& doc) {
  siegelwb::WorkbenchConfig config;
  if (doc.is_null()) return config;
  if (!doc.is_object()) siegelwb::fail(ErrorCode::parse_error, "config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "cache_path") {
      if (!value.is_null()) config.cache_path = value.get<std::string>();
    } else if (key == "use_environment") {
      config.use_environment = value.get<bool>();
    } else if (key == "threads") {
      const auto n = value.get<long long>();
      siegelwb::require(n >= 1 && n <= 256, ErrorCode::invalid_argument, "threads must lie in 1..256");
      config.threads = static_cast<unsigned>(n);
    } else if (key == "dedup") {
      config.dedup = value.get<bool>();
    } else if (key == "verify_cache") {
      config.verify_cache = value.get<bool>();
    } else if (key == "precision") {
      const auto p = value.get<std::string>();
      siegelwb::require(p == "standard" || p == "high", ErrorCode::invalid_argument,
                        "precision must be 'standard' or 'high'");
      config.precision = p == "high" ? siegelwb::Precision::high : siegelwb::Precision::standard;
    } else {
      siegelwb::fail(ErrorCode::invalid_argument, "unknown config key '" + key + "'");
    }
  }
  return config;
}

thread_local std::string create_error;

}  // namespace

extern "C" {

const char* swb_version(void) { return "1.0.0"; }

const char* swb_status_name(swb_status status) {
  if (status == SWB_OK) return "ok";
  return siegelwb::error_code_name(static_cast<ErrorCode>(status));
}

swb_status swb_workbench_create(const char* config_json, swb_workbench** out) {
  if (out == nullptr) return SWB_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    const Json doc = config_json == nullptr ? Json(nullptr) : parse_json(config_json, "config");
    auto handle = std::make_unique<swb_workbench>();
    handle->wb = std::make_unique<siegelwb::Workbench>(config_from_json(doc));
    *out = handle.release();
    return SWB_OK;
  } catch (const siegelwb::Error& e) {
    create_error = error_json(e.code(), e.what());
    return static_cast<swb_status>(e.code());
  } catch (const Json::exception& e) {
    create_error = error_json(ErrorCode::parse_error, e.what());
    return SWB_ERR_PARSE;
  } catch (const std::exception& e) {
    create_error = error_json(ErrorCode::internal, e.what());
    return SWB_ERR_INTERNAL;
  }
}

void swb_workbench_destroy(swb_workbench* wb) { delete wb; }

const char* swb_last_error(const swb_workbench* wb) {
  if (wb == nullptr) return create_error.empty() ? "{}" : create_error.c_str();
  return wb->last_error.c_str();
}

void swb_free(char* str) { std::free(str); }

swb_status swb_lattice_enum(swb_workbench* wb, const char* lattice, long long max_norm, int include_vectors,
                            char** out_json) {
  return guarded(wb, [&](siegelwb::Workbench& w) {
    emit(siegelwb::commands::lattice_enum(w, text(lattice, "lattice"), max_norm, include_vectors != 0), out_json,
         nullptr);
  });
}

swb_status swb_theta_coeffs(swb_workbench* wb, const char* lattice, int genus, long long max_trace,
                            char** out_json) {
  return guarded(wb, [&](siegelwb::Workbench& w) {
    emit(siegelwb::commands::theta_coeffs(w, text(lattice, "lattice"), genus, max_trace), out_json, nullptr);
  });
}

swb_status swb_siegel_phi(swb_workbench* wb, const char* expansion_json, char** out_json) {
  return guarded(wb, [&](siegelwb::Workbench&) {
    emit(siegelwb::commands::siegel_phi(parse_json(expansion_json, "expansion")), out_json, nullptr);
  });
}

swb_status swb_schottky_verify(swb_workbench* wb, int genus, long long max_trace, char** out_json, int* passed) {
  return guarded(wb, [&](siegelwb::Workbench& w) {
    emit(siegelwb::commands::schottky_verify(w, genus, max_trace), out_json, passed);
  });
}

swb_status swb_eval(swb_workbench* wb, const char* form, int genus, const char* tau, long long max_trace,
                    long long direct_budget, char** out_json) {
  return guarded(wb, [&](siegelwb::Workbench& w) {
    emit(siegelwb::commands::eval(w, text(form, "form"), genus, text(tau, "tau"), max_trace, direct_budget),
         out_json, nullptr);
  });
}

swb_status swb_fay_check(swb_workbench* wb, const char* degeneration_json, const char* options_json,
                         char** out_json, int* passed) {
  return guarded(wb, [&](siegelwb::Workbench& w) {
    const Json options = options_json == nullptr ? Json::object() : parse_json(options_json, "options");
    emit(siegelwb::commands::fay_check(w, parse_json(degeneration_json, "degeneration data"), options), out_json,
         passed);
  });
}

swb_status swb_cache_stats(swb_workbench* wb, char** out_json) {
  return guarded(wb, [&](siegelwb::Workbench& w) { emit(siegelwb::commands::cache_stats(w), out_json, nullptr); });
}

swb_status swb_session_stats(swb_workbench* wb, char** out_json) {
  return guarded(wb, [&](siegelwb::Workbench& w) { emit(siegelwb::commands::session_stats(w), out_json, nullptr); });
}

}  // extern "C"
