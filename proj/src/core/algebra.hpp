// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Products of shifted Ramanujan sequences.
//
// For coprime p > q, c_p(n - a1) * c_q(n - a2) is again a cyclic shift of
// c_pq. Since c_pq = c_p * c_q and each factor has exact period equal to its
// modulus, the shift s is fixed by s = a1 (mod p) and s = a2 (mod q), i.e.
// the Chinese-remainder combination of the two shifts. When the reduced
// shifts coincide this is simply that common value.
//
// The closed form that is often quoted for unequal shifts,
// s = a2*p - a1*q (mod pq), agrees with the CRT shift only for particular
// (p, q); printed_product_shift() exposes it so sweeps can report how often.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ramsum {

/// c_q(n - alpha), alpha kept in [0, q).
class ShiftedSequence {
 public:
  ShiftedSequence(std::int64_t q, std::int64_t alpha);

  std::int64_t modulus() const noexcept { return q_; }
  std::int64_t shift() const noexcept { return alpha_; }

 private:
  std::int64_t q_;
  std::int64_t alpha_;
};

std::int64_t eval_shifted(const ShiftedSequence& s, std::int64_t n);

struct ProductResult {
  std::int64_t modulus = 0;
  std::int64_t shift = 0;
  std::vector<std::int64_t> values;  // c_pq(n - shift), n = 0..pq-1
};

/// Shift of c_pq equal to c_p(n - a1) c_q(n - a2), in [0, pq). Rejects
/// p <= q, q < 1 and gcd(p, q) != 1.
std::int64_t product_shift(std::int64_t p, std::int64_t q, std::int64_t alpha1, std::int64_t alpha2);

/// product_shift plus one period of the predicted sequence.
ProductResult predict_product(std::int64_t p, std::int64_t q, std::int64_t alpha1, std::int64_t alpha2);

/// Sign conventions for the textbook unequal-shift closed form.
enum class PrintedSign {
  AsPrinted,  // s = a2*p - a1*q
  Negated,    // s = a1*q - a2*p
};

/// Closed-form shift as quoted (equal reduced shifts give a1), reduced mod pq.
std::int64_t printed_product_shift(std::int64_t p, std::int64_t q, std::int64_t alpha1, std::int64_t alpha2,
                                   PrintedSign sign = PrintedSign::AsPrinted);

struct Mismatch {
  std::int64_t n = 0;
  std::int64_t brute = 0;
  std::int64_t predicted = 0;
};

struct ProductCheck {
  ProductResult predicted;
  std::vector<std::int64_t> brute;  // c_p(n - a1) * c_q(n - a2), n = 0..pq-1
  std::optional<Mismatch> mismatch;

  bool equal() const noexcept { return !mismatch.has_value(); }
};

ProductCheck check_product(std::int64_t p, std::int64_t q, std::int64_t alpha1, std::int64_t alpha2);

/// Smallest s in [0, m) with values[n] = period[(n - s) mod m] for all n,
/// found by exhaustive comparison; nullopt when no cyclic shift matches.
std::optional<std::int64_t> find_cyclic_shift(std::span<const std::int64_t> values,
                                              std::span<const std::int64_t> period);

}  // namespace ramsum
