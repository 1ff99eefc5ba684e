/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The siegelwb Authors
 *
 * C interface of the siegelwb library. All results are JSON documents
 * returned as heap strings owned by the caller (release with swb_free).
 */
#ifndef SIEGELWB_H
#define SIEGELWB_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SWB_API __declspec(dllexport)
#else
#define SWB_API __attribute__((visibility("default")))
#endif

/* Opaque handle: one set of lattice counters sharing a count cache. */
typedef struct swb_workbench swb_workbench;

typedef enum swb_status {
  SWB_OK = 0,
  SWB_ERR_INVALID_ARGUMENT = 1,
  SWB_ERR_UNSUPPORTED_LATTICE = 2,
  SWB_ERR_INCOMPATIBLE_EXPANSION = 3,
  SWB_ERR_DOMAIN = 4,
  SWB_ERR_DEGENERATE_FIBER = 5,
  SWB_ERR_PARSE = 6,
  SWB_ERR_IO = 7,
  SWB_ERR_CACHE_MISMATCH = 8,
  SWB_ERR_INTERNAL = 99
} swb_status;

SWB_API const char* swb_version(void);
SWB_API const char* swb_status_name(swb_status status);

/* config_json may be NULL. Keys: cache_path (string), use_environment (bool),
 * threads (int), dedup (bool), verify_cache (bool),
 * precision ("standard" | "high"). */
SWB_API swb_status swb_workbench_create(const char* config_json, swb_workbench** out);
SWB_API void swb_workbench_destroy(swb_workbench* wb);

/* JSON error object {"error","code","message"} of the last failed call on
 * this handle, or "{}". Valid until the next call on the handle. */
SWB_API const char* swb_last_error(const swb_workbench* wb);

SWB_API void swb_free(char* str);

SWB_API swb_status swb_lattice_enum(swb_workbench* wb, const char* lattice, long long max_norm,
                                    int include_vectors, char** out_json);
SWB_API swb_status swb_theta_coeffs(swb_workbench* wb, const char* lattice, int genus,
                                    long long max_trace, char** out_json);
/* Applies the Siegel operator to a serialized expansion. */
SWB_API swb_status swb_siegel_phi(swb_workbench* wb, const char* expansion_json, char** out_json);
/* *passed receives 1 when the report status is "pass". */
SWB_API swb_status swb_schottky_verify(swb_workbench* wb, int genus, long long max_trace,
                                       char** out_json, int* passed);
/* form: lattice name or "schottky"; direct_budget < 0 disables the direct
 * lattice-sum cross-check. */
SWB_API swb_status swb_eval(swb_workbench* wb, const char* form, int genus, const char* tau,
                            long long max_trace, long long direct_budget, char** out_json);
SWB_API swb_status swb_fay_check(swb_workbench* wb, const char* degeneration_json,
                                 const char* options_json, char** out_json, int* passed);
SWB_API swb_status swb_cache_stats(swb_workbench* wb, char** out_json);
/* Hit/miss counters of representation counts made through this handle. */
SWB_API swb_status swb_session_stats(swb_workbench* wb, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SIEGELWB_H */
