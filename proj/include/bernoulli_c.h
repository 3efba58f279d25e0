/*
 * Copyright 2026 The bernoulli-kit Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface to the bernoulli-kit library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Functions report failure through bk_status;
 * the message for the most recent failure on the calling thread is available
 * from bk_last_error(). Strings returned through `char **` out-parameters are
 * heap allocated and must be released with bk_string_free().
 *
 * Rationals cross the boundary as reduced "p/q" strings (q >= 1), never as
 * floating point.
 */

#ifndef BERNOULLI_C_H
#define BERNOULLI_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BK_BUILDING_LIBRARY)
#    define BK_API __declspec(dllexport)
#  else
#    define BK_API __declspec(dllimport)
#  endif
#else
#  define BK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum value, bad binding */
  BK_ERR_UNKNOWN_NAME = 2,     /* method, identity or special-case name */
  BK_ERR_CACHE_TOO_SHORT = 3,
  BK_ERR_MALFORMED_CACHE = 4, /* persisted cache failed validation */
  BK_ERR_IO = 5,
  BK_ERR_INTERNAL = 6
} bk_status;

typedef enum bk_method {
  BK_METHOD_RECURRENCE = 0,
  BK_METHOD_SERIES = 1,
  BK_METHOD_AKIYAMA_TANIGAWA = 2
} bk_method;

typedef enum bk_trace_poly {
  BK_TRACE_P = 0,
  BK_TRACE_ANTISYMMETRY_RESIDUAL = 1,
  BK_TRACE_PQ = 2,
  BK_TRACE_PQ_ANTISYMMETRY_RESIDUAL = 3
} bk_trace_poly;

typedef struct bk_cache bk_cache;
typedef struct bk_poly bk_poly;
typedef struct bk_trace bk_trace;
typedef struct bk_report bk_report;
typedef struct bk_sequence bk_sequence;

BK_API const char *bk_status_string(bk_status status);
BK_API const char *bk_last_error(void);
BK_API void bk_string_free(char *s);

BK_API bk_status bk_method_from_name(const char *name, bk_method *out);
BK_API const char *bk_method_name(bk_method method);

/* ---- Bernoulli numbers -------------------------------------------------- */

/* B_n from scratch with the given algorithm. */
BK_API bk_status bk_bernoulli_number(uint32_t n, bk_method method, char **out);

/* B_0..B_n_max from scratch with the given algorithm. */
BK_API bk_status bk_sequence_compute(uint32_t n_max, bk_method method,
                                     bk_sequence **out);
BK_API void bk_sequence_destroy(bk_sequence *seq);
BK_API size_t bk_sequence_size(const bk_sequence *seq);
BK_API bk_status bk_sequence_value(const bk_sequence *seq, size_t i, char **out);

/* ---- Cache ------------------------------------------------------------- */

BK_API bk_status bk_cache_create(bk_cache **out);
BK_API void bk_cache_destroy(bk_cache *cache);
/* Populate entries up to new_max. Not safe concurrently with any other use
 * of the same cache. */
BK_API bk_status bk_cache_extend(bk_cache *cache, uint32_t new_max);
/* Number of populated entries; max index is size - 1. */
BK_API size_t bk_cache_size(const bk_cache *cache);
BK_API bk_status bk_cache_value(const bk_cache *cache, size_t n, char **out);
BK_API bk_status bk_cache_save(const bk_cache *cache, const char *path);
/* BK_ERR_IO when the file cannot be opened, BK_ERR_MALFORMED_CACHE when its
 * contents are rejected. */
BK_API bk_status bk_cache_load(const char *path, bk_cache **out);

/* ---- Polynomials ------------------------------------------------------- */

BK_API bk_status bk_bernoulli_polynomial(const bk_cache *cache, uint32_t n,
                                         bk_poly **out);
BK_API void bk_poly_destroy(bk_poly *poly);
/* -1 for the zero polynomial. */
BK_API long bk_poly_degree(const bk_poly *poly);
BK_API bk_status bk_poly_coeff(const bk_poly *poly, size_t i, char **out);
/* Ascending sparse text form, "0" for the zero polynomial. */
BK_API bk_status bk_poly_text(const bk_poly *poly, char **out);

/* ---- Proof replay ------------------------------------------------------ */

BK_API bk_status bk_replay_proof(const bk_cache *cache, uint32_t m, uint32_t n,
                                 uint32_t q, bk_trace **out);
BK_API void bk_trace_destroy(bk_trace *trace);
/* Borrowed; valid while the trace lives. */
BK_API const bk_poly *bk_trace_poly_get(const bk_trace *trace, bk_trace_poly which);
BK_API int bk_trace_odd_in_shifted(const bk_trace *trace);
BK_API int bk_trace_expansion_match(const bk_trace *trace);
BK_API int bk_trace_degenerate(const bk_trace *trace);
BK_API int bk_trace_holds(const bk_trace *trace);
BK_API bk_status bk_trace_l_value(const bk_trace *trace, char **out);

/* ---- Identities -------------------------------------------------------- */

/* Largest Bernoulli index a verify_grid call would read. */
BK_API bk_status bk_grid_max_index(const char *identity, uint32_t m_max,
                                   uint32_t n_max, uint32_t q_max, size_t *out);
BK_API bk_status bk_verify_grid(const bk_cache *cache, const char *identity,
                                uint32_t m_max, uint32_t n_max, uint32_t q_max,
                                unsigned threads, bk_report **out);
BK_API void bk_report_destroy(bk_report *report);
BK_API const char *bk_report_identity(const bk_report *report);
BK_API const char *bk_report_grid(const bk_report *report);
BK_API uint64_t bk_report_checked(const bk_report *report);
BK_API int bk_report_all_zero(const bk_report *report);
BK_API size_t bk_report_failure_count(const bk_report *report);
BK_API bk_status bk_report_failure(const bk_report *report, size_t i, uint32_t *m,
                                   uint32_t *n, uint32_t *q, char **residual);

/* Residual of a named special case. Unused parameters are passed as -1. */
BK_API bk_status bk_special_case(const bk_cache *cache, const char *name, int64_t m,
                                 int64_t n, int64_t q, char **residual);

#ifdef __cplusplus
}
#endif

#endif /* BERNOULLI_C_H */
