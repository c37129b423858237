/*
 * lockcalc C API.
 *
 * Every function returns an lkc_status. On failure a human-readable message
 * for the calling thread is available from lkc_last_error_message() until the
 * next call on that thread. Handles are opaque and owned by the caller; free
 * them with the matching *_destroy function. A session is immutable once
 * configured and may be shared by concurrent readers.
 */
#ifndef LOCKCALC_LOCKCALC_H
#define LOCKCALC_LOCKCALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LKC_BUILDING_LIBRARY)
#    define LKC_API __declspec(dllexport)
#  else
#    define LKC_API __declspec(dllimport)
#  endif
#else
#  define LKC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lkc_status {
    LKC_OK = 0,
    LKC_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown subcommand or format */
    LKC_ERR_DOMAIN = 2,           /* value outside an operation's domain */
    LKC_ERR_NUMERIC = 3,          /* non-finite intermediate */
    LKC_ERR_SOLVER = 4,
    LKC_ERR_CONFIG_PARSE = 5,     /* malformed document or unreadable file */
    LKC_ERR_CONFIG_VALIDATION = 6,
    LKC_ERR_CONFIG_UNKNOWN_KEY = 7,
    LKC_ERR_INTERNAL = 8
} lkc_status;

typedef enum lkc_format {
    LKC_FORMAT_CSV = 0,
    LKC_FORMAT_TABLE = 1,
    LKC_FORMAT_SVG = 2
} lkc_format;

typedef struct lkc_session lkc_session;
typedef struct lkc_buffer lkc_buffer;

LKC_API const char* lkc_version(void);
LKC_API const char* lkc_status_string(lkc_status status);
LKC_API const char* lkc_last_error_message(void);

/* Sessions hold one validated run configuration. */
LKC_API lkc_status lkc_session_create_default(lkc_session** out);
LKC_API lkc_status lkc_session_create_from_file(const char* path, lkc_session** out);
LKC_API lkc_status lkc_session_create_from_json(const char* json_text, lkc_session** out);
LKC_API void lkc_session_destroy(lkc_session* session);

LKC_API lkc_status lkc_session_set_seed(lkc_session* session, uint64_t seed);
LKC_API lkc_status lkc_session_set_samples(lkc_session* session, int64_t samples);
LKC_API lkc_status lkc_session_format(const lkc_session* session, lkc_format* out);
LKC_API lkc_status lkc_session_to_json(const lkc_session* session, lkc_buffer** out);

/* Subcommand names: project, compare, consistency, endstate, finalsize,
 * sweep, paper-check. exit_code (optional) receives 0, or 1 when a
 * paper-check row failed. */
LKC_API lkc_status lkc_run(const lkc_session* session, const char* subcommand, lkc_format format,
                           lkc_buffer** out, int* exit_code);
LKC_API lkc_status lkc_parse_format(const char* name, lkc_format* out);

LKC_API const char* lkc_buffer_data(const lkc_buffer* buffer);
LKC_API size_t lkc_buffer_size(const lkc_buffer* buffer);
LKC_API void lkc_buffer_destroy(lkc_buffer* buffer);

/* Scalar operations. */
LKC_API lkc_status lkc_weekly_deaths(double initial_weekly_deaths, double weekly_factor, int horizon_weeks,
                                     int week, double* out);
LKC_API lkc_status lkc_cumulative_deaths(double initial_weekly_deaths, double weekly_factor, int horizon_weeks,
                                         double* out);
LKC_API lkc_status lkc_herd_immunity_threshold(double r0, double* out);

typedef struct lkc_final_size {
    double attack_rate;
    double herd_threshold;
    double overshoot;
    double residual;
    int iterations;
} lkc_final_size;

LKC_API lkc_status lkc_final_size_solve(double r0, double initial_susceptible_fraction, lkc_final_size* out);

typedef struct lkc_decision_model {
    double lockdown_cost_per_week;
    double cost_per_death;
    double initial_weekly_deaths;
    double lockdown_factor;
    double easing_factor;
    int horizon_weeks;
} lkc_decision_model;

/* ease receives 1 for ease, 0 for lockdown; lhs/rhs may be null. */
LKC_API lkc_status lkc_weekly_easing_condition(const lkc_decision_model* model, int week, int* ease, double* lhs,
                                               double* rhs);
LKC_API lkc_status lkc_block_easing_condition(const lkc_decision_model* model, int* ease, double* lhs,
                                              double* rhs);

LKC_API lkc_status lkc_mortality_multiplier(double multiplier_per_discovery, int discoveries, double* out);

#ifdef __cplusplus
}
#endif

#endif /* LOCKCALC_LOCKCALC_H */
