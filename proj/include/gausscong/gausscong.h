#ifndef GAUSSCONG_H
#define GAUSSCONG_H

/*
 * C interface to the gausscong library: exact Laurent expansions of rational
 * functions, Gauss congruence checks and the classification procedures.
 *
 * Objects are opaque handles released with their *_free function. Strings
 * returned through char** are heap allocated and released with gc_string_free.
 * Every call returns a gc_status; on failure gc_last_error() describes the
 * problem for the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GC_API __declspec(dllexport)
#else
#define GC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
  GC_OK = 0,
  GC_ERR_INVALID_ARGUMENT = 1,
  GC_ERR_VARIABLE_MISMATCH = 2,
  GC_ERR_ZERO_DENOMINATOR = 3,
  GC_ERR_ZERO_INPUT = 4,
  GC_ERR_NOT_VERTEX = 5,
  GC_ERR_NOT_PRIME = 6,
  GC_ERR_OUT_OF_TRUNCATION = 7,
  GC_ERR_PARSE = 8,
  GC_ERR_NOT_LINEAR = 9,
  GC_ERR_NON_INTEGRAL_EXPONENT = 10,
  GC_ERR_NOT_FACE = 11,
  GC_ERR_DEGREE = 12,
  GC_ERR_CONSTANT_TERM = 13,
  GC_ERR_OVERFLOW = 14,
  GC_ERR_UNDEFINED_SUBSTITUTION = 15,
  GC_ERR_INTERNAL = 99
} gc_status;

typedef struct gc_ratfun gc_ratfun;
typedef struct gc_series gc_series;

GC_API const char* gc_version(void);
GC_API const char* gc_status_name(gc_status status);
/* Message of the last failed call on this thread ("" if none). */
GC_API const char* gc_last_error(void);
/* Byte offset of the last parse error on this thread, -1 otherwise. */
GC_API int64_t gc_last_error_offset(void);
GC_API void gc_string_free(char* s);

/* Number of variables an expression mentions (largest index used). */
GC_API gc_status gc_expression_nvars(const char* text, size_t* out);

/* num / den in nvars variables; nvars = 0 infers the count (at least 1). */
GC_API gc_status gc_ratfun_parse(const char* num, const char* den, size_t nvars, gc_ratfun** out);
GC_API void gc_ratfun_free(gc_ratfun* f);
GC_API size_t gc_ratfun_nvars(const gc_ratfun* f);
GC_API gc_status gc_ratfun_to_string(const gc_ratfun* f, char** out);
GC_API gc_status gc_ratfun_to_json(const gc_ratfun* f, char** out);

/* Expansion at a vertex of N(Q); vertex = NULL picks the canonical vertex. */
GC_API gc_status gc_expand(const gc_ratfun* f, const int64_t* vertex, size_t vertex_len, int64_t bound,
                           gc_series** out);
GC_API void gc_series_free(gc_series* s);
GC_API gc_status gc_series_dump(const gc_series* s, char** out);
GC_API gc_status gc_series_to_json(const gc_series* s, char** out);
/* Coefficient as "num/den"; GC_ERR_OUT_OF_TRUNCATION beyond the bound. */
GC_API gc_status gc_series_coefficient(const gc_series* s, const int64_t* k, size_t len, char** out);
GC_API gc_status gc_series_apply_up(const gc_series* s, uint64_t p, gc_series** out);

typedef struct gc_check_options {
  const uint64_t* primes; /* NULL: 2, 3, 5, 7, 11, 13 */
  size_t nprimes;
  int r_max;
  int strength;
  int64_t m_budget; /* negative: bound / (smallest prime)^2 */
  unsigned jobs;
  int64_t bound;
  const int64_t* vertex; /* NULL: canonical vertex */
  size_t vertex_len;
} gc_check_options;

GC_API void gc_check_options_init(gc_check_options* opts);
/* JSON report with one entry per prime. */
GC_API gc_status gc_check_gauss(const gc_ratfun* f, const gc_check_options* opts, char** json_out);

/* Certified classifications, reported as JSON. */
GC_API gc_status gc_minton(const gc_ratfun* f, char** json_out);
GC_API gc_status gc_classify_linear(const gc_ratfun* f, char** json_out);
/* z is the zero-based index of the variable Q need not be linear in. */
GC_API gc_status gc_classify_mostly_linear(const gc_ratfun* f, size_t z, char** json_out);
GC_API gc_status gc_classify_degree2(const gc_ratfun* f, char** json_out);

/* Constructions. */
GC_API gc_status gc_construct_log_det(const gc_ratfun* const* fs, size_t m, size_t nvars, gc_ratfun** out);
/* (q_k x^k / Q) det(theta_i f_j / f_j): Q linear in linear_vars, k in {0,1}^nlinear. */
GC_API gc_status gc_construct_qdet(const gc_ratfun* q, const size_t* linear_vars, size_t nlinear, const int64_t* k,
                                   const gc_ratfun* const* fs, size_t m, const size_t* log_vars, size_t nlog,
                                   gc_ratfun** out);
GC_API gc_status gc_substitute_univariate(const gc_ratfun* f, const gc_ratfun* const* gs, size_t n, gc_ratfun** out);
GC_API gc_status gc_substitute_multivariate(const gc_ratfun* f, const gc_ratfun* const* gs, size_t n,
                                            gc_ratfun** out);
/* entries: rows * cols rationals ("a" or "a/b"), row-major; column i is the image of variable i. */
GC_API gc_status gc_toroidal_substitute(const gc_ratfun* f, const char* const* entries, size_t rows, size_t cols,
                                        gc_ratfun** out);
GC_API gc_status gc_restrict_face(const gc_ratfun* f, const int64_t* form, size_t len, int64_t offset,
                                  gc_ratfun** out);
GC_API gc_status gc_faces_json(const gc_ratfun* f, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GAUSSCONG_H */
