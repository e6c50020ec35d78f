/*
 * Copyright 2026 The ramsum Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the ramsum library: exact Ramanujan sums, Ramanujan
 * derivative operators, shifted-product identities and the oracle-vs-fast
 * benchmark.
 *
 * Conventions
 *   - Every fallible call returns rs_status. On failure a one-line message
 *     is available from rs_last_error() on the calling thread until that
 *     thread's next failing call.
 *   - Objects are opaque handles created by rs_*_create / rs_*_run style
 *     functions and released with the matching rs_*_destroy. Destroy
 *     functions accept NULL.
 *   - Pointers returned by accessors (taps, samples, strings) stay valid
 *     until the owning handle is destroyed.
 *   - Arrays filled by the caller take a capacity; RS_ERR_BUFFER_TOO_SMALL is
 *     returned with the required length in *count / *len.
 *   - All functions are safe to call concurrently on distinct handles, and on
 *     the same handle for read-only accessors.
 */

#ifndef RAMSUM_RAMSUM_H
#define RAMSUM_RAMSUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RAMSUM_BUILDING_LIBRARY)
#    define RS_API __declspec(dllexport)
#  else
#    define RS_API __declspec(dllimport)
#  endif
#else
#  define RS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_ERR_INVALID_ARGUMENT = 1,
  RS_ERR_OVERFLOW = 2,
  RS_ERR_IO = 3,
  RS_ERR_PARSE = 4,
  RS_ERR_NUMERIC = 5,
  RS_ERR_BUFFER_TOO_SMALL = 6,
  RS_ERR_INTERNAL = 7
} rs_status;

typedef enum rs_variant { RS_FIRST_DERIVATIVE = 0, RS_SECOND_DERIVATIVE = 1 } rs_variant;

typedef enum rs_boundary { RS_BOUNDARY_ZERO = 0, RS_BOUNDARY_REPLICATE = 1, RS_BOUNDARY_WRAP = 2 } rs_boundary;

RS_API const char* rs_status_name(rs_status status);
RS_API const char* rs_last_error(void);
RS_API const char* rs_version(void);

/* ---- Ramanujan sums ---------------------------------------------------- */

/* Prime factorization by trial division. Fills up to `capacity` entries. */
RS_API rs_status rs_factorize(int64_t n, int64_t* primes, int32_t* exponents, size_t capacity, size_t* count);

RS_API rs_status rs_sum_oracle(int64_t q, int64_t n, int64_t* out);
RS_API rs_status rs_sum_prime(int64_t p, int64_t n, int64_t* out);
RS_API rs_status rs_sum_prime_power(int64_t p, int32_t l, int64_t n, int64_t* out);
RS_API rs_status rs_sum_fast(int64_t q, int64_t n, int64_t* out);

/* values[n] = c_q(n), n = 0..q-1. `capacity` must be at least q. */
RS_API rs_status rs_period_table(int64_t q, int64_t* values, size_t capacity);

/* ---- Kernels and signals ----------------------------------------------- */

typedef struct rs_kernel rs_kernel;
typedef struct rs_signal rs_signal;

RS_API rs_status rs_kernel_create(int64_t q, rs_variant variant, rs_kernel** out);
RS_API void rs_kernel_destroy(rs_kernel* kernel);
RS_API int64_t rs_kernel_modulus(const rs_kernel* kernel);
RS_API int64_t rs_kernel_anchor(const rs_kernel* kernel);
RS_API rs_variant rs_kernel_variant(const rs_kernel* kernel);
RS_API const int64_t* rs_kernel_taps(const rs_kernel* kernel, size_t* len);

RS_API rs_status rs_signal_create(const double* samples, size_t len, rs_boundary boundary, rs_signal** out);
RS_API rs_status rs_signal_read(const char* path, rs_signal** out);
RS_API rs_status rs_signal_write(const rs_signal* signal, const char* path);
RS_API void rs_signal_destroy(rs_signal* signal);
RS_API const double* rs_signal_samples(const rs_signal* signal, size_t* len);
RS_API rs_boundary rs_signal_boundary(const rs_signal* signal);
RS_API rs_status rs_signal_set_boundary(rs_signal* signal, rs_boundary boundary);

/* Output has the input's length and boundary policy. */
RS_API rs_status rs_apply(const rs_kernel* kernel, const rs_signal* input, rs_signal** out);

RS_API rs_status rs_write_table(const int64_t* values, size_t len, const char* path);

/* Closed-form first-derivative ramp response. */
RS_API rs_status rs_ramp_constant(int64_t q, double* out);

/* ---- Derivative verification reports ----------------------------------- */

typedef struct rs_report rs_report;

RS_API rs_status rs_verify_first_derivative(int64_t q, size_t length, rs_report** out);
RS_API rs_status rs_verify_second_derivative(int64_t q, size_t length, rs_report** out);
RS_API void rs_report_destroy(rs_report* report);
RS_API int rs_report_passed(const rs_report* report);
RS_API size_t rs_report_check_count(const rs_report* report);
RS_API rs_status rs_report_check(const rs_report* report, size_t index, const char** name, const char** expected,
                                 const char** observed, int* passed);

/* ---- Shifted products --------------------------------------------------- */

typedef struct rs_product rs_product;

/* Predicts c_p(n - a1) * c_q(n - a2) as a shift of c_pq and compares it with
 * the brute-force product over one period. Requires p > q >= 1, gcd = 1. */
RS_API rs_status rs_product_check(int64_t p, int64_t q, int64_t a1, int64_t a2, rs_product** out);
RS_API void rs_product_destroy(rs_product* product);
RS_API int64_t rs_product_modulus(const rs_product* product);
RS_API int64_t rs_product_shift(const rs_product* product);
RS_API const int64_t* rs_product_predicted(const rs_product* product, size_t* len);
RS_API const int64_t* rs_product_brute(const rs_product* product, size_t* len);
/* 1 when predicted and brute-force periods agree. Otherwise 0 and, when the
 * out-pointers are non-NULL, the first differing n and both values. */
RS_API int rs_product_equal(const rs_product* product, int64_t* n, int64_t* brute, int64_t* predicted);
/* The textbook closed form a2*p - a1*q (mod pq) for unequal shifts. */
RS_API int64_t rs_product_printed_shift(const rs_product* product);

/* ---- Invariant suites --------------------------------------------------- */

typedef struct rs_suite rs_suite;

RS_API rs_status rs_suite_run(int64_t q_max, rs_suite** out);
RS_API void rs_suite_destroy(rs_suite* suite);
RS_API int rs_suite_passed(const rs_suite* suite);
RS_API size_t rs_suite_row_count(const rs_suite* suite);
RS_API rs_status rs_suite_row(const rs_suite* suite, size_t index, const char** suite_name, const char** property,
                              int64_t* cases, int64_t* failures, const char** detail, int* informational);

/* ---- Benchmark ---------------------------------------------------------- */

typedef struct rs_bench rs_bench;

typedef struct rs_bench_record {
  int64_t q;
  int64_t n_evaluated;
  int64_t naive_ns;
  int64_t fast_ns;
  double speedup;
  int exact;
  int64_t naive_terms_per_n;
  int64_t prime_factors;
  const char* diagnostic; /* empty when exact */
} rs_bench_record;

RS_API rs_status rs_bench_run(const int64_t* q_list, size_t count, int64_t samples_per_q, rs_bench** out);
RS_API void rs_bench_destroy(rs_bench* bench);
RS_API size_t rs_bench_record_count(const rs_bench* bench);
RS_API rs_status rs_bench_record_get(const rs_bench* bench, size_t index, rs_bench_record* out);
RS_API const char* rs_bench_csv(const rs_bench* bench);
/* Default modulus sweep for a ceiling; same capacity contract as above. */
RS_API rs_status rs_bench_default_moduli(int64_t q_max, int64_t* q_list, size_t capacity, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* RAMSUM_RAMSUM_H */
