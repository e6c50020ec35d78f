// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#include "ramsum/ramsum.h"

#include <algorithm>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/arith.hpp"
#include "core/bench.hpp"
#include "core/error.hpp"
#include "core/operators.hpp"
#include "core/signal_io.hpp"
#include "core/suites.hpp"

struct rs_kernel {
  ramsum::RamanujanKernel value;
};

struct rs_signal {
  ramsum::Signal value;
};

struct rs_report {
  ramsum::VerificationReport value;
};

struct rs_product {
  ramsum::ProductCheck value;
  std::int64_t printed_shift;
};

struct rs_suite {
  ramsum::SuiteReport value;
};

struct rs_bench {
  std::vector<ramsum::BenchRecord> records;
  std::string csv;
};

namespace {

thread_local std::string g_last_error;

rs_status to_status(ramsum::Errc code) {
  switch (code) {
    case ramsum::Errc::InvalidArgument:
      return RS_ERR_INVALID_ARGUMENT;
    case ramsum::Errc::Overflow:
      return RS_ERR_OVERFLOW;
    case ramsum::Errc::Io:
      return RS_ERR_IO;
    case ramsum::Errc::Parse:
      return RS_ERR_PARSE;
    case ramsum::Errc::Numeric:
      return RS_ERR_NUMERIC;
  }
  return RS_ERR_INTERNAL;
}

rs_status set_error(rs_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating every exception into a status code.
template <typename F>
rs_status guarded(F&& body) noexcept {
  try {
    body();
    return RS_OK;
  } catch (const ramsum::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(RS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(RS_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(RS_ERR_INTERNAL, "unknown error");
  }
}

rs_status null_arg(const char* what) { return set_error(RS_ERR_INVALID_ARGUMENT, std::string(what) + " is NULL"); }

template <typename T>
const T* data_or_null(const std::vector<T>& v, size_t* len) {
  if (len) *len = v.size();
  return v.data();
}

ramsum::Boundary to_boundary(rs_boundary b) {
  switch (b) {
    case RS_BOUNDARY_ZERO:
      return ramsum::Boundary::ZeroPad;
    case RS_BOUNDARY_REPLICATE:
      return ramsum::Boundary::Replicate;
    case RS_BOUNDARY_WRAP:
      return ramsum::Boundary::PeriodicWrap;
  }
  ramsum::fail(ramsum::Errc::InvalidArgument, "unknown boundary policy " + std::to_string(static_cast<int>(b)));
}

rs_boundary from_boundary(ramsum::Boundary b) {
  switch (b) {
    case ramsum::Boundary::ZeroPad:
      return RS_BOUNDARY_ZERO;
    case ramsum::Boundary::Replicate:
      return RS_BOUNDARY_REPLICATE;
    case ramsum::Boundary::PeriodicWrap:
      return RS_BOUNDARY_WRAP;
  }
  return RS_BOUNDARY_REPLICATE;
}

rs_status scalar(std::int64_t* out, auto&& compute) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = compute(); });
}

}  // namespace

extern "C" {

const char* rs_status_name(rs_status status) {
  switch (status) {
    case RS_OK:
      return "ok";
    case RS_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case RS_ERR_OVERFLOW:
      return "overflow";
    case RS_ERR_IO:
      return "i/o error";
    case RS_ERR_PARSE:
      return "parse error";
    case RS_ERR_NUMERIC:
      return "numeric error";
    case RS_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case RS_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* rs_last_error(void) { return g_last_error.c_str(); }

const char* rs_version(void) { return "1.0.0"; }

rs_status rs_factorize(int64_t n, int64_t* primes, int32_t* exponents, size_t capacity, size_t* count) {
  if (!count) return null_arg("count");
  std::optional<ramsum::Factorization> f;
  const rs_status st = guarded([&] { f.emplace(ramsum::factorize(n)); });
  if (st != RS_OK) return st;
  *count = f->size();
  if (f->size() > capacity) {
    return set_error(RS_ERR_BUFFER_TOO_SMALL, "factorization needs " + std::to_string(f->size()) + " entries");
  }
  if (f->size() > 0 && (!primes || !exponents)) return null_arg("output array");
  for (size_t i = 0; i < f->size(); ++i) {
    primes[i] = f->factors()[i].prime;
    exponents[i] = f->factors()[i].exponent;
  }
  return RS_OK;
}

rs_status rs_sum_oracle(int64_t q, int64_t n, int64_t* out) {
  return scalar(out, [&] { return ramsum::sum_oracle(q, n); });
}

rs_status rs_sum_prime(int64_t p, int64_t n, int64_t* out) {
  return scalar(out, [&] { return ramsum::sum_prime(p, n); });
}

rs_status rs_sum_prime_power(int64_t p, int32_t l, int64_t n, int64_t* out) {
  return scalar(out, [&] { return ramsum::sum_prime_power(p, l, n); });
}

rs_status rs_sum_fast(int64_t q, int64_t n, int64_t* out) {
  return scalar(out, [&] { return ramsum::sum_fast(q, n); });
}

rs_status rs_period_table(int64_t q, int64_t* values, size_t capacity) {
  if (q >= 1 && capacity < static_cast<uint64_t>(q)) {
    return set_error(RS_ERR_BUFFER_TOO_SMALL, "period table needs " + std::to_string(q) + " entries");
  }
  if (!values && q >= 1) return null_arg("values");
  return guarded([&] {
    const auto period = ramsum::period_table(q);
    std::copy(period.values().begin(), period.values().end(), values);
  });
}

rs_status rs_kernel_create(int64_t q, rs_variant variant, rs_kernel** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    ramsum::Variant v;
    switch (variant) {
      case RS_FIRST_DERIVATIVE:
        v = ramsum::Variant::FirstDerivative;
        break;
      case RS_SECOND_DERIVATIVE:
        v = ramsum::Variant::SecondDerivative;
        break;
      default:
        ramsum::fail(ramsum::Errc::InvalidArgument, "unknown kernel variant");
    }
    *out = new rs_kernel{ramsum::RamanujanKernel::make(q, v)};
  });
}

void rs_kernel_destroy(rs_kernel* kernel) { delete kernel; }

int64_t rs_kernel_modulus(const rs_kernel* kernel) { return kernel ? kernel->value.modulus() : 0; }

int64_t rs_kernel_anchor(const rs_kernel* kernel) { return kernel ? kernel->value.anchor() : 0; }

rs_variant rs_kernel_variant(const rs_kernel* kernel) {
  return kernel && kernel->value.variant() == ramsum::Variant::SecondDerivative ? RS_SECOND_DERIVATIVE
                                                                                 : RS_FIRST_DERIVATIVE;
}

const int64_t* rs_kernel_taps(const rs_kernel* kernel, size_t* len) {
  if (!kernel) {
    if (len) *len = 0;
    return nullptr;
  }
  const auto taps = kernel->value.taps();
  if (len) *len = taps.size();
  return taps.data();
}

rs_status rs_signal_create(const double* samples, size_t len, rs_boundary boundary, rs_signal** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!samples && len > 0) return null_arg("samples");
  return guarded([&] {
    *out = new rs_signal{ramsum::Signal(std::vector<double>(samples, samples + len), to_boundary(boundary))};
  });
}

rs_status rs_signal_read(const char* path, rs_signal** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!path) return null_arg("path");
  return guarded([&] { *out = new rs_signal{ramsum::read_signal(path)}; });
}

rs_status rs_signal_write(const rs_signal* signal, const char* path) {
  if (!signal) return null_arg("signal");
  if (!path) return null_arg("path");
  return guarded([&] { ramsum::write_signal(signal->value, path); });
}

void rs_signal_destroy(rs_signal* signal) { delete signal; }

const double* rs_signal_samples(const rs_signal* signal, size_t* len) {
  if (!signal) {
    if (len) *len = 0;
    return nullptr;
  }
  const auto s = signal->value.samples();
  if (len) *len = s.size();
  return s.data();
}

rs_boundary rs_signal_boundary(const rs_signal* signal) {
  return signal ? from_boundary(signal->value.boundary()) : RS_BOUNDARY_REPLICATE;
}

rs_status rs_signal_set_boundary(rs_signal* signal, rs_boundary boundary) {
  if (!signal) return null_arg("signal");
  return guarded([&] {
    const auto s = signal->value.samples();
    signal->value = ramsum::Signal(std::vector<double>(s.begin(), s.end()), to_boundary(boundary));
  });
}

rs_status rs_apply(const rs_kernel* kernel, const rs_signal* input, rs_signal** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!kernel) return null_arg("kernel");
  if (!input) return null_arg("input");
  return guarded([&] { *out = new rs_signal{ramsum::apply(kernel->value, input->value)}; });
}

rs_status rs_write_table(const int64_t* values, size_t len, const char* path) {
  if (!values && len > 0) return null_arg("values");
  if (!path) return null_arg("path");
  return guarded([&] { ramsum::write_table(std::span<const std::int64_t>(values, len), path); });
}

rs_status rs_ramp_constant(int64_t q, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = ramsum::ramp_constant(q); });
}

rs_status rs_verify_first_derivative(int64_t q, size_t length, rs_report** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new rs_report{ramsum::verify_first_derivative(q, length)}; });
}

rs_status rs_verify_second_derivative(int64_t q, size_t length, rs_report** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new rs_report{ramsum::verify_second_derivative(q, length)}; });
}

void rs_report_destroy(rs_report* report) { delete report; }

int rs_report_passed(const rs_report* report) { return report && report->value.passed() ? 1 : 0; }

size_t rs_report_check_count(const rs_report* report) { return report ? report->value.checks.size() : 0; }

rs_status rs_report_check(const rs_report* report, size_t index, const char** name, const char** expected,
                          const char** observed, int* passed) {
  if (!report) return null_arg("report");
  if (index >= report->value.checks.size()) {
    return set_error(RS_ERR_INVALID_ARGUMENT, "check index " + std::to_string(index) + " out of range");
  }
  const auto& c = report->value.checks[index];
  if (name) *name = c.name.c_str();
  if (expected) *expected = c.expected.c_str();
  if (observed) *observed = c.observed.c_str();
  if (passed) *passed = c.passed ? 1 : 0;
  return RS_OK;
}

rs_status rs_product_check(int64_t p, int64_t q, int64_t a1, int64_t a2, rs_product** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto check = ramsum::check_product(p, q, a1, a2);
    const auto printed = ramsum::printed_product_shift(p, q, a1, a2);
    *out = new rs_product{std::move(check), printed};
  });
}

void rs_product_destroy(rs_product* product) { delete product; }

int64_t rs_product_modulus(const rs_product* product) { return product ? product->value.predicted.modulus : 0; }

int64_t rs_product_shift(const rs_product* product) { return product ? product->value.predicted.shift : 0; }

const int64_t* rs_product_predicted(const rs_product* product, size_t* len) {
  if (!product) {
    if (len) *len = 0;
    return nullptr;
  }
  return data_or_null(product->value.predicted.values, len);
}

const int64_t* rs_product_brute(const rs_product* product, size_t* len) {
  if (!product) {
    if (len) *len = 0;
    return nullptr;
  }
  return data_or_null(product->value.brute, len);
}

int rs_product_equal(const rs_product* product, int64_t* n, int64_t* brute, int64_t* predicted) {
  if (!product) return 0;
  const auto& m = product->value.mismatch;
  if (!m) return 1;
  if (n) *n = m->n;
  if (brute) *brute = m->brute;
  if (predicted) *predicted = m->predicted;
  return 0;
}

int64_t rs_product_printed_shift(const rs_product* product) { return product ? product->printed_shift : 0; }

rs_status rs_suite_run(int64_t q_max, rs_suite** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new rs_suite{ramsum::run_all_suites(q_max)}; });
}

void rs_suite_destroy(rs_suite* suite) { delete suite; }

int rs_suite_passed(const rs_suite* suite) { return suite && suite->value.passed() ? 1 : 0; }

size_t rs_suite_row_count(const rs_suite* suite) { return suite ? suite->value.rows.size() : 0; }

rs_status rs_suite_row(const rs_suite* suite, size_t index, const char** suite_name, const char** property,
                       int64_t* cases, int64_t* failures, const char** detail, int* informational) {
  if (!suite) return null_arg("suite");
  if (index >= suite->value.rows.size()) {
    return set_error(RS_ERR_INVALID_ARGUMENT, "row index " + std::to_string(index) + " out of range");
  }
  const auto& r = suite->value.rows[index];
  if (suite_name) *suite_name = r.suite.c_str();
  if (property) *property = r.property.c_str();
  if (cases) *cases = r.cases;
  if (failures) *failures = r.failures;
  if (detail) *detail = r.detail.c_str();
  if (informational) *informational = r.informational ? 1 : 0;
  return RS_OK;
}

rs_status rs_bench_run(const int64_t* q_list, size_t count, int64_t samples_per_q, rs_bench** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!q_list && count > 0) return null_arg("q_list");
  return guarded([&] {
    auto records = ramsum::bench_compare(std::span<const std::int64_t>(q_list, count), samples_per_q);
    auto csv = ramsum::bench_csv(records);
    *out = new rs_bench{std::move(records), std::move(csv)};
  });
}

void rs_bench_destroy(rs_bench* bench) { delete bench; }

size_t rs_bench_record_count(const rs_bench* bench) { return bench ? bench->records.size() : 0; }

rs_status rs_bench_record_get(const rs_bench* bench, size_t index, rs_bench_record* out) {
  if (!bench) return null_arg("bench");
  if (!out) return null_arg("out");
  if (index >= bench->records.size()) {
    return set_error(RS_ERR_INVALID_ARGUMENT, "record index " + std::to_string(index) + " out of range");
  }
  const auto& r = bench->records[index];
  *out = rs_bench_record{r.q,       r.n_evaluated, r.naive_ns, r.fast_ns, r.speedup, r.exact ? 1 : 0,
                         r.naive_terms_per_n, r.prime_factors, r.diagnostic.c_str()};
  return RS_OK;
}

const char* rs_bench_csv(const rs_bench* bench) { return bench ? bench->csv.c_str() : ""; }

rs_status rs_bench_default_moduli(int64_t q_max, int64_t* q_list, size_t capacity, size_t* count) {
  if (!count) return null_arg("count");
  std::vector<std::int64_t> qs;
  const rs_status st = guarded([&] { qs = ramsum::default_bench_moduli(q_max); });
  if (st != RS_OK) return st;
  *count = qs.size();
  if (qs.size() > capacity) {
    return set_error(RS_ERR_BUFFER_TOO_SMALL, "moduli list needs " + std::to_string(qs.size()) + " entries");
  }
  if (!q_list && !qs.empty()) return null_arg("q_list");
  std::copy(qs.begin(), qs.end(), q_list);
  return RS_OK;
}

}  // extern "C"
