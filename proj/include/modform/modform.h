/*
 * modform: exact q-expansions of classical and vector-valued modular forms
 * for SL(2, Z).
 *
 * C interface. Objects are opaque handles released with the matching
 * *_free function. Every call returns an mf_status; on failure the message
 * and a structured JSON error object are available from mf_last_error() and
 * mf_last_error_json() on the calling thread. Strings handed out through
 * `char**` parameters belong to the caller and must be released with
 * mf_string_free().
 */
#ifndef MODFORM_MODFORM_H
#define MODFORM_MODFORM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(MODFORM_BUILDING_LIBRARY)
#define MODFORM_API __attribute__((visibility("default")))
#else
#define MODFORM_API
#endif

typedef enum mf_status {
  MF_OK = 0,
  MF_ERR_INVALID_ARGUMENT = 1,
  MF_ERR_PARSE = 2,
  MF_ERR_DOMAIN_MISMATCH = 3,
  MF_ERR_NON_INTEGRAL_OFFSET = 4,
  MF_ERR_CANNOT_EXTEND = 5,
  MF_ERR_ODD_WEIGHT = 6,
  MF_ERR_NOT_IN_M = 7,
  MF_ERR_AMBIGUOUS_TRUNCATION = 8,
  MF_ERR_INSUFFICIENT_TRUNCATION = 9,
  MF_ERR_SINGULAR_SAMPLE_MATRIX = 10,
  MF_ERR_NOT_A_ROOT = 11,
  MF_ERR_RESONANT_ROOT = 12,
  MF_ERR_ROOTS_OUT_OF_RANGE = 13,
  MF_ERR_ROOTS_NOT_DISTINCT = 14,
  MF_ERR_IRRATIONAL_ROOTS = 15,
  MF_ERR_NON_INTEGRAL_WEIGHT = 16,
  MF_ERR_ORDER_TOO_LARGE = 17,
  MF_ERR_OUT_OF_RANGE = 18,
  MF_ERR_NOT_INDECOMPOSABLE = 19,
  MF_ERR_DEPENDENT_GENERATORS = 20,
  MF_ERR_INTERNAL = 99
} mf_status;

typedef struct mf_series mf_series;
typedef struct mf_mlde mf_mlde;

MODFORM_API const char* mf_version(void);
MODFORM_API const char* mf_status_name(mf_status status);
MODFORM_API const char* mf_last_error(void);
/* {"error": "<name>", "message": "...", ...}; empty object after success. */
MODFORM_API const char* mf_last_error_json(void);
MODFORM_API void mf_string_free(char* s);

/* ---- truncated q-expansions (exact rational coefficients) ---- */

/* form: "P", "Q", "R", "delta" or "eta^h". */
MODFORM_API mf_status mf_series_form(const char* form, size_t terms, mf_series** out);
/* {"leading": "num/den", "coeffs": ["num/den", ...]} */
MODFORM_API mf_status mf_series_from_json(const char* json, mf_series** out);
MODFORM_API mf_status mf_series_to_json(const mf_series* s, char** out);
MODFORM_API mf_status mf_series_to_text(const mf_series* s, char** out);
MODFORM_API void mf_series_free(mf_series* s);

MODFORM_API mf_status mf_series_truncation(const mf_series* s, size_t* out);
MODFORM_API mf_status mf_series_add(const mf_series* a, const mf_series* b, mf_series** out);
MODFORM_API mf_status mf_series_mul(const mf_series* a, const mf_series* b, mf_series** out);
MODFORM_API mf_status mf_series_scale(const mf_series* a, const char* rational, mf_series** out);
MODFORM_API mf_status mf_series_theta(const mf_series* a, mf_series** out);
MODFORM_API mf_status mf_series_serre(const mf_series* a, int weight, mf_series** out);
MODFORM_API mf_status mf_series_align(const mf_series* a, size_t terms, mf_series** out);
/* *reliable is 0 when |q| > 0.5 at tau. */
MODFORM_API mf_status mf_series_evaluate(const mf_series* a, double tau_re, double tau_im, double* out_re,
                                         double* out_im, int* reliable);

/* ---- classical forms ---- */

MODFORM_API mf_status mf_dim_m(int weight, int* out);

/* ---- modular linear differential equations ---- */

/* Comma separated rationals, e.g. "0,5/6". */
MODFORM_API mf_status mf_mlde_from_exponents(const char* exponents, mf_mlde** out);
/* JSON array of g_0..g_{p-2}, each {"weight": w, "coords": [{"u":..,"v":..,"c":"num/den"}]}. */
MODFORM_API mf_status mf_mlde_from_coeffs(int weight, const char* coeffs_json, mf_mlde** out);
MODFORM_API void mf_mlde_free(mf_mlde* op);
MODFORM_API mf_status mf_mlde_to_json(const mf_mlde* op, char** out);

/* Indicial data, fundamental system, residuals and the weight relation. */
MODFORM_API mf_status mf_mlde_solve(const mf_mlde* op, size_t terms, char** report_json);
/* points: npoints (re, im) pairs, or NULL for the default unit-circle points. */
MODFORM_API mf_status mf_mlde_monodromy(const mf_mlde* op, size_t terms, double tol, const double* points,
                                        size_t npoints, char** report_json);
/* Checks {F, DF, ..., D^{p-1}F} as free generators up to weight k_max. */
MODFORM_API mf_status mf_mlde_verify_basis(const mf_mlde* op, int k_max, size_t terms, char** report_json);

/* ---- module structure ---- */

MODFORM_API mf_status mf_classify2d(int a, int b, char** report_json);
/* Series with numerator sum t^{weights[i]}; coefficients listed up to max_weight. */
MODFORM_API mf_status mf_poincare_weights(const int* weights, size_t count, int max_weight, char** report_json);
MODFORM_API mf_status mf_poincare_cyclic(int k0, int p, int max_weight, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* MODFORM_MODFORM_H */
