// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>

#include "core/arith.hpp"
#include "core/error.hpp"

namespace ramsum {

namespace {

template <typename F>
std::int64_t median_ns(F&& body) {
  body();  // warm-up
  std::array<std::int64_t, 3> t{};
  for (auto& slot : t) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    slot = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  }
  std::sort(t.begin(), t.end());
  return t[1];
}

}  // namespace

std::vector<std::int64_t> bench_points(std::int64_t q, std::int64_t samples) {
  std::vector<std::int64_t> ns;
  if (q <= samples) {
    for (std::int64_t n = 0; n < q; ++n) ns.push_back(n);
    return ns;
  }
  for (std::int64_t i = 0; i < samples; ++i) {
    ns.push_back(static_cast<std::int64_t>(static_cast<wide_int>(i) * q / samples));
  }
  return ns;
}

std::vector<BenchRecord> bench_compare(std::span<const std::int64_t> q_list, std::int64_t samples_per_q) {
  require(samples_per_q >= 1, "bench needs samples_per_q >= 1");
  for (const auto q : q_list) require(q >= 2, "bench needs every q >= 2, got " + std::to_string(q));

  std::vector<BenchRecord> records;
  for (const std::int64_t q : q_list) {
    const auto ns = bench_points(q, samples_per_q);
    std::vector<std::int64_t> naive(ns.size());
    std::vector<std::int64_t> fast(ns.size());

    BenchRecord rec;
    rec.q = q;
    rec.n_evaluated = static_cast<std::int64_t>(ns.size());
    rec.naive_ns = median_ns([&] {
      for (std::size_t i = 0; i < ns.size(); ++i) naive[i] = sum_oracle(q, ns[i]);
    });
    rec.fast_ns = median_ns([&] {
      for (std::size_t i = 0; i < ns.size(); ++i) fast[i] = sum_fast(q, ns[i]);
    });
    rec.speedup = static_cast<double>(rec.naive_ns) / static_cast<double>(std::max<std::int64_t>(rec.fast_ns, 1));
    rec.naive_terms_per_n = totient(q);
    rec.prime_factors = static_cast<std::int64_t>(factorize(q).size());

    rec.exact = true;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (naive[i] != fast[i]) {
        rec.exact = false;
        rec.diagnostic = "q=" + std::to_string(q) + " n=" + std::to_string(ns[i]) + ": naive " +
                         std::to_string(naive[i]) + " != fast " + std::to_string(fast[i]);
        break;
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string bench_csv(std::span<const BenchRecord> records) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  char buf[160];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%lld,%lld,%lld,%lld,%.3f,%s\n", static_cast<long long>(r.q),
                  static_cast<long long>(r.n_evaluated), static_cast<long long>(r.naive_ns),
                  static_cast<long long>(r.fast_ns), r.speedup, r.exact ? "true" : "false");
    out += buf;
  }
  return out;
}

std::vector<std::int64_t> default_bench_moduli(std::int64_t q_max) {
  std::vector<std::int64_t> qs;
  for (std::int64_t s = 16; s <= q_max; s *= 4) {
    std::int64_t p = s - 1;
    while (!is_prime(p)) --p;
    qs.push_back(p);
    qs.push_back(s);
    if (s > q_max / 4) break;
  }
  if (q_max >= 510510) qs.push_back(510510);
  if (qs.empty() && q_max >= 2) qs.push_back(q_max);
  return qs;
}

}  // namespace ramsum
