// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ramsum {

struct BenchRecord {
  std::int64_t q = 0;
  std::int64_t n_evaluated = 0;
  std::int64_t naive_ns = 0;  // median of 3, whole n-set
  std::int64_t fast_ns = 0;
  double speedup = 0.0;       // naive_ns / fast_ns
  bool exact = false;
  std::int64_t naive_terms_per_n = 0;  // phi(q) complex terms
  std::int64_t prime_factors = 0;      // distinct primes the fast path touches
  std::string diagnostic;              // first disagreement, empty when exact
};

/// n-set used for modulus q: the full period when q <= samples, otherwise
/// `samples` evenly spaced residues.
std::vector<std::int64_t> bench_points(std::int64_t q, std::int64_t samples);

/// Times sum_oracle against sum_fast on the same n-set. Single-threaded;
/// one warm-up pass, then the median of three timed repetitions.
std::vector<BenchRecord> bench_compare(std::span<const std::int64_t> q_list, std::int64_t samples_per_q);

inline constexpr const char* kBenchCsvHeader = "q,n_evaluated,naive_ns,fast_ns,speedup,exact";

std::string bench_csv(std::span<const BenchRecord> records);

/// Default sweep for a q ceiling: powers of four from 16 and the largest
/// prime below each, plus 510510 when it fits.
std::vector<std::int64_t> default_bench_moduli(std::int64_t q_max);

}  // namespace ramsum
