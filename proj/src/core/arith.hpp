// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Exact Ramanujan sums c_q(n).
//
// Two independent routes are provided:
//   * sum_oracle   - direct evaluation of the sum of n-th powers of the
//                    primitive q-th roots of unity in complex doubles,
//                    rounded to the nearest integer after a residue check.
//   * sum_fast     - exact integer evaluation through the factorization
//                    q = p1^r1 ... pm^rm, lifting each prime power from the
//                    prime closed form and multiplying the results.
//
// All integers are 64-bit signed. Any intermediate that would not fit is
// reported as Errc::Overflow.

#include <cstdint>
#include <span>
#include <vector>

namespace ramsum {

// 128-bit intermediate for products of two 64-bit residues.
__extension__ typedef __int128 wide_int;

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent, primes strictly increasing.
class Factorization {
 public:
  Factorization(std::int64_t n, std::vector<PrimePower> factors);

  std::int64_t value() const noexcept { return n_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }

 private:
  std::int64_t n_;
  std::vector<PrimePower> factors_;
};

/// One period of c_q(n), values[n] for n = 0..q-1.
class RamanujanPeriod {
 public:
  RamanujanPeriod(std::int64_t q, std::vector<std::int64_t> values);

  std::int64_t modulus() const noexcept { return q_; }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t operator[](std::int64_t n) const;

 private:
  std::int64_t q_;
  std::vector<std::int64_t> values_;
};

// Checked 64-bit helpers.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exponent);

/// Non-negative residue of n modulo q (q >= 1).
std::int64_t mod_floor(std::int64_t n, std::int64_t q) noexcept;

bool is_prime(std::int64_t n) noexcept;

/// Trial division up to sqrt(n). Rejects n < 1.
Factorization factorize(std::int64_t n);

/// phi(q) from the factorization of q.
std::int64_t totient(std::int64_t q);

/// Tolerance on the imaginary residue and on the distance to the nearest
/// integer in sum_oracle.
inline constexpr double kOracleTolerance = 1e-6;

std::int64_t sum_oracle(std::int64_t q, std::int64_t n);

/// Batched oracle: same arithmetic as sum_oracle, but the coprime residues
/// of q are enumerated once for all requested n.
std::vector<std::int64_t> sum_oracle_many(std::int64_t q, std::span<const std::int64_t> ns);

/// c_p(n) for prime p: p - 1 if p | n, else -1.
std::int64_t sum_prime(std::int64_t p, std::int64_t n);

/// c_{p^l}(n) = p^(l-1) * c_p(n / p^(l-1)) when p^(l-1) | n, else 0.
std::int64_t sum_prime_power(std::int64_t p, int l, std::int64_t n);

std::int64_t sum_fast(std::int64_t q, std::int64_t n);

/// sum_fast with a precomputed factorization of q.
std::int64_t sum_factored(const Factorization& q, std::int64_t n);

RamanujanPeriod period_table(std::int64_t q);

}  // namespace ramsum
