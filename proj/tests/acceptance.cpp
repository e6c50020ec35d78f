// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. One line per criterion:
//   [PASS] AC<k> <title>: <detail> (<seconds> s, limit <limit> s)
// Exit status is nonzero if any criterion fails or overruns its limit.
// The benchmark criterion has no limit; it only asserts exactness.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/arith.hpp"
#include "core/bench.hpp"
#include "core/error.hpp"
#include "core/operators.hpp"

using namespace ramsum;
using i64 = std::int64_t;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<i64> iota_n(i64 count) {
  std::vector<i64> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), i64{0});
  return v;
}

std::vector<i64> as_vec(std::span<const i64> s) { return {s.begin(), s.end()}; }

// c_m(n) depends on n only through gcd(n, m); one oracle value per divisor.
class GcdClassOracle {
 public:
  i64 operator()(i64 m, i64 n) {
    auto& row = cache_[m];
    const i64 g = std::gcd(mod_floor(n, m), m);
    auto it = row.find(g);
    if (it == row.end()) it = row.emplace(g, sum_oracle(m, g)).first;
    return it->second;
  }

 private:
  std::map<i64, std::map<i64, i64>> cache_;
};

Outcome ac1_reference_tables() {
  int bad = 0;
  std::string first_bad;
  auto expect = [&](const std::string& what, const std::vector<i64>& got, const std::vector<i64>& want) {
    if (got != want) {
      if (bad++ == 0) first_bad = what;
    }
  };
  expect("c_1", as_vec(period_table(1).values()), {1});
  expect("c_2", as_vec(period_table(2).values()), {1, -1});
  expect("c_3", as_vec(period_table(3).values()), {2, -1, -1});
  expect("c_4", as_vec(period_table(4).values()), {2, 0, -2, 0});
  expect("first(2)", as_vec(RamanujanKernel::first(2).taps()), {1, -1});
  expect("first(3)", as_vec(RamanujanKernel::first(3).taps()), {2, -1, -1});
  expect("second(3)", as_vec(RamanujanKernel::second(3).taps()), {-1, 2, -1});
  expect("second(5)", as_vec(RamanujanKernel::second(5).taps()), {-1, -1, 4, -1, -1});
  if (bad) return {false, fmt("%d of 8 sequences differ, first: %s", bad, first_bad.c_str())};
  return {true, "4 period tables and 4 kernels exact"};
}

Outcome ac2_oracle_equivalence() {
  i64 compared = 0;
  for (i64 q = 1; q <= 500; ++q) {
    const auto ns = iota_n(q);
    const auto oracle = sum_oracle_many(q, ns);
    for (i64 n = 0; n < q; ++n) {
      ++compared;
      if (sum_fast(q, n) != oracle[static_cast<std::size_t>(n)]) {
        return {false, fmt("q=%lld n=%lld: fast %lld, oracle %lld", (long long)q, (long long)n,
                           (long long)sum_fast(q, n), (long long)oracle[static_cast<std::size_t>(n)])};
      }
    }
  }
  std::mt19937_64 rng(0x5eed'ac02);
  std::uniform_int_distribution<i64> pick_q(501, 100'000);
  for (int i = 0; i < 200; ++i) {
    const i64 q = pick_q(rng);
    std::uniform_int_distribution<i64> pick_n(-4 * q, 4 * q);
    std::vector<i64> ns(16);
    for (auto& n : ns) n = pick_n(rng);
    const auto oracle = sum_oracle_many(q, ns);
    for (std::size_t j = 0; j < ns.size(); ++j) {
      ++compared;
      if (sum_fast(q, ns[j]) != oracle[j]) {
        return {false, fmt("q=%lld n=%lld: fast %lld, oracle %lld", (long long)q, (long long)ns[j],
                           (long long)sum_fast(q, ns[j]), (long long)oracle[j])};
      }
    }
  }
  return {true, fmt("%lld values equal (q<=500 full periods, 200 random q<=1e5 x 16)", (long long)compared)};
}

Outcome ac3_derivatives() {
  int reports = 0;
  double worst_ramp = 0.0;
  double worst_quad = 0.0;
  for (i64 q = 2; q <= 64; ++q) {
    const auto len = static_cast<std::size_t>(8 * q);
    const auto r = verify_first_derivative(q, len);
    ++reports;
    if (!r.passed()) {
      for (const auto& c : r.checks)
        if (!c.passed) return {false, fmt("first q=%lld %s: %s", (long long)q, c.name.c_str(), c.observed.c_str())};
    }
    const auto k = RamanujanKernel::first(q);
    const double closed = ramp_constant(q);
    const double moment = static_cast<double>(first_moment(k));
    std::vector<double> ramp(len);
    std::iota(ramp.begin(), ramp.end(), 0.0);
    const auto y = apply(k, Signal(ramp));
    const auto in = interior(k, len);
    for (i64 n = in.first; n <= in.last; ++n) {
      const double v = y[static_cast<std::size_t>(n)];
      worst_ramp = std::max({worst_ramp, std::abs(v - closed), std::abs(v - moment)});
    }
    worst_ramp = std::max(worst_ramp, std::abs(closed - moment));
  }
  for (i64 q = 3; q <= 63; q += 2) {
    const auto len = static_cast<std::size_t>(8 * q);
    const auto r = verify_second_derivative(q, len);
    ++reports;
    if (!r.passed()) {
      for (const auto& c : r.checks)
        if (!c.passed) return {false, fmt("second q=%lld %s: %s", (long long)q, c.name.c_str(), c.observed.c_str())};
    }
    const auto k = RamanujanKernel::second(q);
    std::vector<double> quad(len);
    for (std::size_t n = 0; n < len; ++n) quad[n] = static_cast<double>(n) * static_cast<double>(n);
    const auto y = apply(k, Signal(quad));
    const auto in = interior(k, len);
    const double ref = y[static_cast<std::size_t>(in.first)];
    for (i64 n = in.first; n <= in.last; ++n) worst_quad = std::max(worst_quad, std::abs(y[static_cast<std::size_t>(n)] - ref));
  }
  if (worst_ramp >= 1e-6) return {false, fmt("ramp deviation %.3g >= 1e-6", worst_ramp)};
  if (worst_quad >= 1e-9) return {false, fmt("quadratic spread %.3g >= 1e-9", worst_quad)};
  return {true, fmt("%d reports pass; ramp dev %.2g, quadratic spread %.2g", reports, worst_ramp, worst_quad)};
}

Outcome ac4_multiplicativity() {
  GcdClassOracle oracle;
  i64 pairs = 0;
  i64 values = 0;
  for (i64 q = 1; q * (q + 1) <= 2500; ++q) {
    for (i64 p = q + 1; p * q <= 2500; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      const i64 m = p * q;
      const auto cp = period_table(p);
      const auto cq = period_table(q);
      const auto cm = period_table(m);
      for (i64 n = 0; n < m; ++n) {
        ++values;
        const i64 lhs = cp[n] * cq[n];
        const i64 lhs_oracle = oracle(p, n) * oracle(q, n);
        const i64 rhs_oracle = oracle(m, n);
        if (lhs != cm[n] || lhs != lhs_oracle || lhs_oracle != rhs_oracle) {
          return {false, fmt("p=%lld q=%lld n=%lld: %lld*%lld vs c_pq %lld (oracle %lld)", (long long)p, (long long)q,
                             (long long)n, (long long)cp[n], (long long)cq[n], (long long)cm[n],
                             (long long)rhs_oracle)};
        }
      }
    }
  }
  return {true, fmt("%lld coprime pairs, %lld values, all equal", (long long)pairs, (long long)values)};
}

Outcome ac5_shifted_products() {
  // Reference periods straight from the oracle, one per modulus.
  std::vector<std::vector<i64>> ref(601);
  for (i64 m = 1; m <= 600; ++m) ref[static_cast<std::size_t>(m)] = sum_oracle_many(m, iota_n(m));

  i64 cases = 0, matched = 0, printed = 0, negated = 0;
  std::vector<std::string> witnesses;
  for (i64 q = 1; q * (q + 1) <= 600; ++q) {
    for (i64 p = q + 1; p * q <= 600; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const i64 m = p * q;
      const auto& cp = ref[static_cast<std::size_t>(p)];
      const auto& cq = ref[static_cast<std::size_t>(q)];
      const auto& cm = ref[static_cast<std::size_t>(m)];
      if (as_vec(predict_product(p, q, 0, 0).values) != cm) {
        return {false, fmt("period_table(%lld) differs from the oracle", (long long)m)};
      }
      std::vector<i64> brute(static_cast<std::size_t>(m));
      for (i64 a1 = 0; a1 < p; ++a1) {
        for (i64 a2 = 0; a2 < q; ++a2) {
          for (i64 n = 0; n < m; ++n) {
            brute[static_cast<std::size_t>(n)] =
                cp[static_cast<std::size_t>(mod_floor(n - a1, p))] * cq[static_cast<std::size_t>(mod_floor(n - a2, q))];
          }
          ++cases;
          const auto found = find_cyclic_shift(brute, cm);
          const i64 predicted = product_shift(p, q, a1, a2);
          if (found && *found == predicted) {
            ++matched;
          } else if (witnesses.size() < 5) {
            witnesses.push_back(fmt("(p=%lld q=%lld a1=%lld a2=%lld: brute %s, predicted %lld)", (long long)p,
                                    (long long)q, (long long)a1, (long long)a2,
                                    found ? std::to_string(*found).c_str() : "not a shift", (long long)predicted));
          }
          if (found && *found == printed_product_shift(p, q, a1, a2, PrintedSign::AsPrinted)) ++printed;
          if (found && *found == printed_product_shift(p, q, a1, a2, PrintedSign::Negated)) ++negated;
        }
      }
    }
  }
  std::printf("       a2*p - a1*q agrees in %lld of %lld cases; a1*q - a2*p in %lld of %lld\n", (long long)printed,
              (long long)cases, (long long)negated, (long long)cases);
  if (matched != cases) {
    std::string w;
    for (const auto& s : witnesses) w += " " + s;
    return {false, fmt("%lld of %lld shifts mismatch:", (long long)(cases - matched), (long long)cases) + w};
  }
  return {true, fmt("%lld cases, every product is c_pq(n - s) with the predicted s", (long long)cases)};
}

Outcome ac6_prime_powers() {
  GcdClassOracle oracle;
  std::mt19937_64 rng(0x5eed'ac06);
  i64 powers = 0, values = 0, direct = 0;
  for (i64 p = 2; p <= 10'000; ++p) {
    if (!is_prime(p)) continue;
    i64 m = p;
    for (int l = 1; m <= 10'000; ++l, m *= p) {
      ++powers;
      for (i64 n = 0; n < m; ++n) {
        ++values;
        const i64 fast = sum_prime_power(p, l, n);
        if (fast != oracle(m, n)) {
          return {false, fmt("p=%lld l=%d n=%lld: %lld vs oracle %lld", (long long)p, l, (long long)n,
                             (long long)fast, (long long)oracle(m, n))};
        }
      }
      // Direct oracle evaluation as well: full periods for small moduli, samples otherwise.
      std::vector<i64> ns;
      if (m <= 256) {
        ns = iota_n(m);
      } else {
        std::uniform_int_distribution<i64> pick(0, m - 1);
        ns = {0, m / p, pick(rng), pick(rng)};
      }
      const auto ref = sum_oracle_many(m, ns);
      for (std::size_t j = 0; j < ns.size(); ++j) {
        ++direct;
        if (sum_prime_power(p, l, ns[j]) != ref[j]) {
          return {false, fmt("p=%lld l=%d n=%lld: %lld vs direct oracle %lld", (long long)p, l, (long long)ns[j],
                             (long long)sum_prime_power(p, l, ns[j]), (long long)ref[j])};
        }
      }
    }
  }
  return {true, fmt("%lld prime powers, %lld values (+%lld direct oracle points) equal", (long long)powers,
                    (long long)values, (long long)direct)};
}

Outcome ac7_bench() {
  const std::vector<i64> qs = {1009, 4096, 6561, 510510};
  const auto records = bench_compare(qs, 64);
  bool all_exact = records.size() == qs.size();
  for (const auto& r : records) {
    std::printf("       q=%-7lld n=%lld naive %lld ns, fast %lld ns, speedup %.1fx, exact %s\n", (long long)r.q,
                (long long)r.n_evaluated, (long long)r.naive_ns, (long long)r.fast_ns, r.speedup,
                r.exact ? "true" : "false");
    all_exact = all_exact && r.exact;
  }
  return {all_exact, all_exact ? "every record exact (speedups reported, not asserted)" : "inexact record"};
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "reference tables and kernels", 1, ac1_reference_tables},
      {"AC2", "oracle equivalence", 30, ac2_oracle_equivalence},
      {"AC3", "derivative suite", 30, ac3_derivatives},
      {"AC4", "multiplicativity pq<=2500", 30, ac4_multiplicativity},
      {"AC5", "shifted-product sweep pq<=600", 60, ac5_shifted_products},
      {"AC6", "prime powers <=1e4", 10, ac6_prime_powers},
      {"AC7", "benchmark exactness", 0, ac7_bench},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s <= 0 || s < c.limit_s;
    if (!in_time) o.detail += "; exceeded time limit";
    const bool ok = o.passed && in_time;
    failures += ok ? 0 : 1;
    const std::string limit = c.limit_s > 0 ? fmt("limit %.0f s", c.limit_s) : std::string("no limit");
    std::printf("[%s] %s %s: %s (%.2f s, %s)\n", ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), s,
                limit.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %zu of %zu criteria passed\n", failures ? "FAIL" : "PASS", criteria.size() - failures,
              criteria.size());
  return failures ? 1 : 0;
}
