// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

// ramsum command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsum/ramsum.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Largest modulus whose full period the CLI will tabulate.
constexpr std::int64_t kMaxPeriod = 10'000'000;

struct Deleter {
  void operator()(rs_kernel* p) const { rs_kernel_destroy(p); }
  void operator()(rs_signal* p) const { rs_signal_destroy(p); }
  void operator()(rs_product* p) const { rs_product_destroy(p); }
  void operator()(rs_suite* p) const { rs_suite_destroy(p); }
  void operator()(rs_bench* p) const { rs_bench_destroy(p); }
};

template <typename T>
using Handle = std::unique_ptr<T, Deleter>;

struct Failure {
  int exit_code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) { throw Failure{kExitUsage, message}; }

void check(rs_status st) {
  if (st == RS_OK) return;
  const int code = (st == RS_ERR_NUMERIC || st == RS_ERR_INTERNAL) ? kExitFailed : kExitUsage;
  throw Failure{code, rs_last_error()};
}

std::string join(const std::int64_t* v, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& v) { return join(v.data(), v.size()); }

rs_variant parse_variant(const std::string& s) { return s == "second" ? RS_SECOND_DERIVATIVE : RS_FIRST_DERIVATIVE; }

rs_boundary parse_boundary(const std::string& s) {
  if (s == "zero") return RS_BOUNDARY_ZERO;
  if (s == "wrap") return RS_BOUNDARY_WRAP;
  return RS_BOUNDARY_REPLICATE;
}

// ---- sum -----------------------------------------------------------------

struct SumOptions {
  std::int64_t q = 0;
  std::optional<std::int64_t> n;
  std::string method = "fast";
};

std::vector<std::int64_t> evaluate(const SumOptions& o, bool naive) {
  std::vector<std::int64_t> ns;
  if (o.n) {
    ns.push_back(*o.n);
  } else {
    for (std::int64_t n = 0; n < o.q; ++n) ns.push_back(n);
  }
  std::vector<std::int64_t> out(ns.size());
  if (!naive && !o.n) {
    check(rs_period_table(o.q, out.data(), out.size()));
    return out;
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    check(naive ? rs_sum_oracle(o.q, ns[i], &out[i]) : rs_sum_fast(o.q, ns[i], &out[i]));
  }
  return out;
}

int run_sum(const SumOptions& o) {
  if (o.q < 1) usage_error("--q must be a positive integer");
  if (!o.n && o.q > kMaxPeriod) usage_error("--q too large to print a full period; pass --n");
  if (o.method == "both") {
    const auto naive = evaluate(o, true);
    const auto fast = evaluate(o, false);
    const bool match = naive == fast;
    std::printf("naive: %s\nfast: %s\nmatch: %s\n", join(naive).c_str(), join(fast).c_str(), match ? "yes" : "no");
    return match ? kExitOk : kExitFailed;
  }
  std::printf("%s\n", join(evaluate(o, o.method == "naive")).c_str());
  return kExitOk;
}

// ---- kernel / apply ------------------------------------------------------

struct KernelOptions {
  std::int64_t q = 0;
  std::string variant;
  std::string in;
  std::string out;
  std::string boundary = "replicate";
};

Handle<rs_kernel> make_kernel(const KernelOptions& o) {
  rs_kernel* k = nullptr;
  check(rs_kernel_create(o.q, parse_variant(o.variant), &k));
  return Handle<rs_kernel>(k);
}

int run_kernel(const KernelOptions& o) {
  const auto k = make_kernel(o);
  std::size_t len = 0;
  const std::int64_t* taps = rs_kernel_taps(k.get(), &len);
  if (!o.out.empty()) {
    check(rs_write_table(taps, len, o.out.c_str()));
  } else {
    std::printf("%s\n", join(taps, len).c_str());
  }
  return kExitOk;
}

int run_apply(const KernelOptions& o) {
  const auto k = make_kernel(o);
  rs_signal* raw = nullptr;
  check(rs_signal_read(o.in.c_str(), &raw));
  Handle<rs_signal> x(raw);
  check(rs_signal_set_boundary(x.get(), parse_boundary(o.boundary)));
  check(rs_apply(k.get(), x.get(), &raw));
  Handle<rs_signal> y(raw);
  if (!o.out.empty()) {
    check(rs_signal_write(y.get(), o.out.c_str()));
    return kExitOk;
  }
  std::size_t len = 0;
  const double* s = rs_signal_samples(y.get(), &len);
  for (std::size_t i = 0; i < len; ++i) std::printf("%.12g\n", s[i] == 0.0 ? 0.0 : s[i]);
  return kExitOk;
}

// ---- product -------------------------------------------------------------

struct ProductOptions {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
};

int run_product(const ProductOptions& o) {
  rs_product* raw = nullptr;
  check(rs_product_check(o.p, o.q, o.a1, o.a2, &raw));
  Handle<rs_product> prod(raw);
  std::size_t np = 0, nb = 0;
  const std::int64_t* predicted = rs_product_predicted(prod.get(), &np);
  const std::int64_t* brute = rs_product_brute(prod.get(), &nb);
  std::int64_t at = 0, bv = 0, pv = 0;
  const bool equal = rs_product_equal(prod.get(), &at, &bv, &pv) != 0;
  const std::int64_t shift = rs_product_shift(prod.get());
  const std::int64_t printed = rs_product_printed_shift(prod.get());

  std::printf("modulus: %lld\n", static_cast<long long>(rs_product_modulus(prod.get())));
  std::printf("predicted shift: %lld\n", static_cast<long long>(shift));
  std::printf("predicted: %s\n", join(predicted, np).c_str());
  std::printf("brute-force: %s\n", join(brute, nb).c_str());
  if (equal) {
    std::printf("verdict: equal\n");
  } else {
    std::printf("verdict: differ at n=%lld (brute-force %lld, predicted %lld)\n", static_cast<long long>(at),
                static_cast<long long>(bv), static_cast<long long>(pv));
  }
  std::printf("closed-form shift a2*p - a1*q: %lld (%s)\n", static_cast<long long>(printed),
              printed == shift ? "agrees" : "disagrees");
  return equal ? kExitOk : kExitFailed;
}

// ---- verify --------------------------------------------------------------

int run_verify(std::int64_t q_max) {
  if (q_max < 3) usage_error("--q-max must be at least 3");
  rs_suite* raw = nullptr;
  check(rs_suite_run(q_max, &raw));
  Handle<rs_suite> suite(raw);

  std::printf("%-10s %-46s %10s %9s  %-6s %s\n", "suite", "property", "cases", "failures", "status", "detail");
  const std::size_t rows = rs_suite_row_count(suite.get());
  for (std::size_t i = 0; i < rows; ++i) {
    const char *name = nullptr, *property = nullptr, *detail = nullptr;
    std::int64_t cases = 0, failures = 0;
    int info = 0;
    check(rs_suite_row(suite.get(), i, &name, &property, &cases, &failures, &detail, &info));
    const char* status = info ? "INFO" : (failures == 0 ? "PASS" : "FAIL");
    std::printf("%-10s %-46s %10lld %9lld  %-6s %s\n", name, property, static_cast<long long>(cases),
                static_cast<long long>(failures), status, detail);
  }
  const bool ok = rs_suite_passed(suite.get()) != 0;
  std::printf("verify (q-max %lld): %s\n", static_cast<long long>(q_max), ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitFailed;
}

// ---- bench ---------------------------------------------------------------

struct BenchOptions {
  std::int64_t q_max = 0;
  std::int64_t samples = 64;
  std::vector<std::int64_t> q_list;
  std::string csv;
};

int run_bench(const BenchOptions& o) {
  if (o.samples < 1) usage_error("--samples must be positive");
  std::vector<std::int64_t> qs = o.q_list;
  if (qs.empty()) {
    if (o.q_max < 2) usage_error("--q-max must be at least 2");
    std::size_t count = 0;
    rs_bench_default_moduli(o.q_max, nullptr, 0, &count);
    qs.resize(count);
    check(rs_bench_default_moduli(o.q_max, qs.data(), qs.size(), &count));
  }
  rs_bench* raw = nullptr;
  check(rs_bench_run(qs.data(), qs.size(), o.samples, &raw));
  Handle<rs_bench> bench(raw);

  std::printf("%10s %8s %14s %14s %10s %6s %12s %7s\n", "q", "n", "naive_ns", "fast_ns", "speedup", "exact",
              "terms/n", "primes");
  bool all_exact = true;
  for (std::size_t i = 0; i < rs_bench_record_count(bench.get()); ++i) {
    rs_bench_record r{};
    check(rs_bench_record_get(bench.get(), i, &r));
    std::printf("%10lld %8lld %14lld %14lld %10.2f %6s %12lld %7lld\n", static_cast<long long>(r.q),
                static_cast<long long>(r.n_evaluated), static_cast<long long>(r.naive_ns),
                static_cast<long long>(r.fast_ns), r.speedup, r.exact ? "yes" : "no",
                static_cast<long long>(r.naive_terms_per_n), static_cast<long long>(r.prime_factors));
    if (!r.exact) {
      std::fprintf(stderr, "ramsum: bench disagreement: %s\n", r.diagnostic);
      all_exact = false;
    }
  }
  if (!o.csv.empty()) {
    std::FILE* f = std::fopen(o.csv.c_str(), "wb");
    if (!f) usage_error("cannot open '" + o.csv + "' for writing");
    std::fputs(rs_bench_csv(bench.get()), f);
    if (std::fclose(f) != 0) usage_error("write to '" + o.csv + "' failed");
  }
  return all_exact ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ramanujan sums and Ramanujan derivative operators", "ramsum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rs_version());

  SumOptions sum;
  auto* sum_cmd = app.add_subcommand("sum", "Print c_q(n), or one full period");
  sum_cmd->add_option("--q", sum.q, "Modulus q >= 1")->required();
  sum_cmd->add_option("--n", sum.n, "Argument n (any integer); full period when omitted");
  sum_cmd->add_option("--method", sum.method, "naive | fast | both")
      ->check(CLI::IsMember({"naive", "fast", "both"}))
      ->capture_default_str();

  KernelOptions kern;
  auto* kernel_cmd = app.add_subcommand("kernel", "Print or write derivative kernel taps");
  kernel_cmd->add_option("--q", kern.q, "Modulus")->required();
  kernel_cmd->add_option("--variant", kern.variant, "first | second")
      ->required()
      ->check(CLI::IsMember({"first", "second"}));
  kernel_cmd->add_option("--out", kern.out, "Write one tap per line to PATH");

  KernelOptions app_opts;
  auto* apply_cmd = app.add_subcommand("apply", "Filter a signal file with a derivative kernel");
  apply_cmd->add_option("--q", app_opts.q, "Modulus")->required();
  apply_cmd->add_option("--variant", app_opts.variant, "first | second")
      ->required()
      ->check(CLI::IsMember({"first", "second"}));
  apply_cmd->add_option("--in", app_opts.in, "Input signal file")->required();
  apply_cmd->add_option("--out", app_opts.out, "Output signal file (stdout when omitted)");
  apply_cmd->add_option("--boundary", app_opts.boundary, "replicate | zero | wrap")
      ->check(CLI::IsMember({"replicate", "zero", "wrap"}))
      ->capture_default_str();

  ProductOptions prod;
  auto* product_cmd = app.add_subcommand("product", "Shifted product c_p(n-a1) c_q(n-a2) as a shift of c_pq");
  product_cmd->add_option("--p", prod.p, "Larger modulus p")->required();
  product_cmd->add_option("--q", prod.q, "Smaller modulus q, coprime to p")->required();
  product_cmd->add_option("--a1", prod.a1, "Shift of c_p")->required();
  product_cmd->add_option("--a2", prod.a2, "Shift of c_q")->required();

  std::int64_t verify_q_max = 200;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--q-max", verify_q_max, "Largest modulus swept")->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare direct and factorized evaluation");
  bench_cmd->add_option("--q-max", bench.q_max, "Ceiling for the default modulus sweep")->required();
  bench_cmd->add_option("--samples", bench.samples, "Evaluation points per modulus")->capture_default_str();
  bench_cmd->add_option("--q", bench.q_list, "Explicit moduli (comma-separated), overrides the sweep")
      ->delimiter(',');
  bench_cmd->add_option("--csv", bench.csv, "Also write CSV results to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "ramsum: error: %s\n", e.what());
    return kExitUsage;
  }

  try {
    if (*sum_cmd) return run_sum(sum);
    if (*kernel_cmd) return run_kernel(kern);
    if (*apply_cmd) return run_apply(app_opts);
    if (*product_cmd) return run_product(prod);
    if (*verify_cmd) return run_verify(verify_q_max);
    if (*bench_cmd) return run_bench(bench);
  } catch (const Failure& f) {
    std::fprintf(stderr, "ramsum: error: %s\n", f.message.c_str());
    return f.exit_code;
  }
  return kExitUsage;
}
