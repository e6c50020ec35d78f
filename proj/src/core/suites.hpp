// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Invariant sweeps behind `ramsum verify`. Every row is an exhaustive or
// seeded-random sweep of one property; the run passes iff every
// non-informational row has zero failures.

#include <cstdint>
#include <string>
#include <vector>

namespace ramsum {

struct SuiteRow {
  std::string suite;
  std::string property;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string detail;          // first witness on failure, or a note
  bool informational = false;  // reported, never fails the run
};

struct SuiteReport {
  std::int64_t q_max = 0;
  std::vector<SuiteRow> rows;

  bool passed() const noexcept;
};

std::vector<SuiteRow> run_core_suite(std::int64_t q_max);
std::vector<SuiteRow> run_operator_suite(std::int64_t q_max);
std::vector<SuiteRow> run_algebra_suite(std::int64_t q_max);

/// All three suites in a fixed order. Rejects q_max < 3.
SuiteReport run_all_suites(std::int64_t q_max);

}  // namespace ramsum
