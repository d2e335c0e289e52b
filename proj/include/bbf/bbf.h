/*
 * C interface to the Bernstein basis verification library.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a bbf_status; on failure, bbf_last_error() returns a
 * description that stays valid on the calling thread until its next API call.
 */
#ifndef BBF_H
#define BBF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BBF_BUILDING_LIBRARY)
#    define BBF_API __declspec(dllexport)
#  else
#    define BBF_API __declspec(dllimport)
#  endif
#else
#  define BBF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bbf_status {
    BBF_OK = 0,
    BBF_ERR_INVALID_ARGUMENT = 1, /* bad parameter or configuration */
    BBF_ERR_DOMAIN = 2,           /* mathematically inadmissible input */
    BBF_ERR_UNKNOWN_IDENTITY = 3,
    BBF_ERR_INTERNAL = 4
} bbf_status;

typedef enum bbf_format { BBF_FORMAT_JSON = 0, BBF_FORMAT_TEXT = 1 } bbf_format;

typedef struct bbf_config bbf_config;
typedef struct bbf_report bbf_report;

BBF_API const char *bbf_version(void);
BBF_API int bbf_schema_version(void);
BBF_API const char *bbf_last_error(void);

/* Identity catalog, in report order. Out-of-range indices return NULL. */
BBF_API size_t bbf_identity_count(void);
BBF_API const char *bbf_identity_name(size_t index);
BBF_API const char *bbf_identity_summary(size_t index);

/* Campaign configuration. Defaults: max_degree 10, egf_order 24, all
 * identities, grid_margin 1, series_eps 1e-9, JSON, seed 0, no mutation. */
BBF_API bbf_status bbf_config_create(bbf_config **out);
BBF_API void bbf_config_destroy(bbf_config *config);
BBF_API bbf_status bbf_config_set_max_degree(bbf_config *config, int max_degree);
BBF_API bbf_status bbf_config_set_egf_order(bbf_config *config, int egf_order);
BBF_API bbf_status bbf_config_set_grid_margin(bbf_config *config, int grid_margin);
/* Decimal ("1e-9", "0.001") or exact ("1/1000") text. */
BBF_API bbf_status bbf_config_set_series_eps(bbf_config *config, const char *eps);
BBF_API bbf_status bbf_config_set_seed(bbf_config *config, uint64_t seed);
BBF_API bbf_status bbf_config_set_format(bbf_config *config, bbf_format format);
/* Comma-separated catalog names or group prefixes; NULL or "" selects all. */
BBF_API bbf_status bbf_config_set_identities(bbf_config *config, const char *comma_list);
/* Perturbs the right-hand side of every check of one identity; NULL clears. */
BBF_API bbf_status bbf_config_set_mutate(bbf_config *config, const char *identity);
/* 0 selects the hardware concurrency. */
BBF_API bbf_status bbf_config_set_threads(bbf_config *config, unsigned threads);
BBF_API bbf_status bbf_config_validate(const bbf_config *config);

BBF_API bbf_status bbf_run_verify(const bbf_config *config, bbf_report **out);
BBF_API void bbf_report_destroy(bbf_report *report);
BBF_API size_t bbf_report_total(const bbf_report *report);
BBF_API size_t bbf_report_passed(const bbf_report *report);
BBF_API size_t bbf_report_failed(const bbf_report *report);
/* The returned text is owned by the report and lives until it is destroyed
 * or rendered again. */
BBF_API bbf_status bbf_report_render(bbf_report *report, bbf_format format, const char **text, size_t *length);

/* Single checks. The verdict is written to *passed (1 pass, 0 fail). */
BBF_API bbf_status bbf_check_functional_equation(const char *identity, const char *const *param_names,
                                                 const long *param_values, size_t param_count, int order,
                                                 int *passed);

/* Exact Bernstein basis polynomial C(n,k) x^k (1-x)^(n-k) as "p/q"
 * coefficients, lowest power first. Writes up to capacity entries into
 * coeffs (each a malloc'd string the caller frees with bbf_string_free) and
 * the true count into *count. */
BBF_API bbf_status bbf_bernstein_basis(int n, int k, char **coeffs, size_t capacity, size_t *count);
BBF_API void bbf_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif
