/*
 * physkit C API.
 *
 * Every fallible call returns a pk_status. On failure a description is
 * available from pk_last_error_message() on the same thread until the next
 * failing call. Handles are opaque; each *_create has a matching *_destroy,
 * and destroy functions accept NULL. Buffers returned through char** must be
 * released with pk_buffer_free().
 */
#ifndef PHYSKIT_PHYSKIT_H
#define PHYSKIT_PHYSKIT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PHYSKIT_BUILDING)
#    define PK_API __declspec(dllexport)
#  else
#    define PK_API __declspec(dllimport)
#  endif
#else
#  define PK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as the CLI exit codes. */
typedef enum pk_status {
  PK_OK = 0,
  PK_ERROR = 1,        /* I/O or internal failure */
  PK_USAGE_ERROR = 2,  /* invalid name, flag or value */
  PK_DOMAIN_ERROR = 3  /* physical singularity (field point on source, ...) */
} pk_status;

PK_API const char* pk_last_error_message(void);
PK_API const char* pk_version(void);

/* ---- scenario registry ------------------------------------------------ */

PK_API size_t pk_scenario_count(void);
/* NULL when index is out of range. */
PK_API const char* pk_scenario_name(size_t index);
PK_API const char* pk_scenario_description(const char* scenario);
/* "particle", "angular" or "system". */
PK_API const char* pk_scenario_state_kind(const char* scenario);
PK_API pk_status pk_scenario_defaults(const char* scenario, double* dt, long long* steps,
                                      const char** method);
/* 1 when the evolution method ("euler", "euler-cromer", "rk4") applies. */
PK_API int pk_scenario_supports_method(const char* scenario, const char* method);
PK_API size_t pk_scenario_param_count(const char* scenario);
/* has_default is 0 for parameters whose default derives from others. */
PK_API pk_status pk_scenario_param(const char* scenario, size_t index, const char** name,
                                   double* default_value, int* has_default,
                                   const char** description);

/* ---- simulation ------------------------------------------------------- */

typedef struct pk_run_config pk_run_config;

PK_API pk_status pk_run_config_create(const char* scenario, pk_run_config** out);
PK_API void pk_run_config_destroy(pk_run_config* cfg);
PK_API pk_status pk_run_config_set_dt(pk_run_config* cfg, double dt);
PK_API pk_status pk_run_config_set_steps(pk_run_config* cfg, long long steps);
PK_API pk_status pk_run_config_set_method(pk_run_config* cfg, const char* method);
PK_API pk_status pk_run_config_set_param(pk_run_config* cfg, const char* name, double value);

/* Writes the trajectory CSV. The file is created only when the whole run
 * succeeds. */
PK_API pk_status pk_simulate_to_file(const pk_run_config* cfg, const char* path);
PK_API pk_status pk_simulate_to_buffer(const pk_run_config* cfg, char** data, size_t* size);

/* ---- fields ------------------------------------------------------------ */

typedef struct pk_field pk_field;

typedef struct pk_grid_axis {
  double min;
  double max;
  int count;
} pk_grid_axis;

/* kind: "e-line" (params lambda, length) or "b-loop" (params current, radius). */
PK_API pk_status pk_field_create(const char* kind, pk_field** out);
PK_API void pk_field_destroy(pk_field* field);
PK_API size_t pk_field_param_count(const char* kind);
PK_API const char* pk_field_param_name(const char* kind, size_t index);
PK_API pk_status pk_field_set_param(pk_field* field, const char* name, double value);
PK_API pk_status pk_field_set_intervals(pk_field* field, int intervals);
PK_API pk_status pk_field_eval(const pk_field* field, const double at[3], double out[3]);
/* Rows x,y,z,Fx,Fy,Fz; x slowest, z fastest. */
PK_API pk_status pk_field_grid_to_file(const pk_field* field, const pk_grid_axis axes[3],
                                       const char* path);
PK_API pk_status pk_field_grid_to_buffer(const pk_field* field, const pk_grid_axis axes[3],
                                         char** data, size_t* size);

/* ---- utilities --------------------------------------------------------- */

/* Parses "x,y,z" into out[3]. */
PK_API pk_status pk_parse_triple(const char* text, double out[3]);
PK_API void pk_buffer_free(char* data);

#ifdef __cplusplus
}
#endif

#endif /* PHYSKIT_PHYSKIT_H */
