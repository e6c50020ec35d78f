// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/algebra.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "core/arith.hpp"
#include "core/error.hpp"

namespace ramsum {

namespace {

void check_pair(std::int64_t p, std::int64_t q) {
  require(q >= 1, "product needs q >= 1, got " + std::to_string(q));
  require(p > q, "product needs p > q, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
  require(std::gcd(p, q) == 1,
          "product needs coprime moduli, gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  checked_mul(p, q);
}

// Inverse of a modulo m, gcd(a, m) = 1, m >= 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = mod_floor(a, m), r1 = m;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    r0 = std::exchange(r1, r0 - t * r1);
    s0 = std::exchange(s1, s0 - t * s1);
  }
  return mod_floor(s0, m);
}

// s with s = a1 (mod p), s = a2 (mod q), 0 <= s < pq.
std::int64_t crt_shift(std::int64_t p, std::int64_t q, std::int64_t a1, std::int64_t a2) {
  if (q == 1) return a1;
  const auto t = static_cast<std::int64_t>(static_cast<wide_int>(mod_floor(a2 - a1, q)) * inverse_mod(p, q) % q);
  return a1 + p * t;
}

}  // namespace

ShiftedSequence::ShiftedSequence(std::int64_t q, std::int64_t alpha) : q_(q), alpha_(0) {
  require(q >= 1, "shifted sequence needs q >= 1, got " + std::to_string(q));
  alpha_ = mod_floor(alpha, q);
}

std::int64_t eval_shifted(const ShiftedSequence& s, std::int64_t n) {
  return sum_fast(s.modulus(), mod_floor(n - s.shift(), s.modulus()));
}

std::int64_t product_shift(std::int64_t p, std::int64_t q, std::int64_t alpha1, std::int64_t alpha2) {
  check_pair(p, q);
  const std::int64_t a1 = mod_floor(alpha1, p);
  const std::int64_t a2 = mod_floor(alpha2, q);
  return a1 == a2 ? a1 : crt_shift(p, q, a1, a2);
}

ProductResult predict_product(std::int64_t p, std::int64_t q, std::int64_t alpha1, std::int64_t alpha2) {
  const std::int64_t shift = product_shift(p, q, alpha1, alpha2);
  const std::int64_t m = p * q;

  const auto period = period_table(m);
  ProductResult out{m, shift, std::vector<std::int64_t>(static_cast<std::size_t>(m))};
  for (std::int64_t n = 0; n < m; ++n) out.values[static_cast<std::size_t>(n)] = period[n - shift];
  return out;
}

std::int64_t printed_product_shift(std::int64_t p, std::int64_t q, std::int64_t alpha1, std::int64_t alpha2,
                                   PrintedSign sign) {
  check_pair(p, q);
  const std::int64_t m = p * q;
  const std::int64_t a1 = mod_floor(alpha1, p);
  const std::int64_t a2 = mod_floor(alpha2, q);
  if (a1 == a2) return a1;
  const auto s = static_cast<wide_int>(a2) * p - static_cast<wide_int>(a1) * q;
  const auto r = static_cast<std::int64_t>(((sign == PrintedSign::AsPrinted ? s : -s) % m + m) % m);
  return r;
}

ProductCheck check_product(std::int64_t p, std::int64_t q, std::int64_t alpha1, std::int64_t alpha2) {
  ProductCheck out{predict_product(p, q, alpha1, alpha2), {}, std::nullopt};
  const std::int64_t m = out.predicted.modulus;

  // Same values as eval_shifted on each factor, tabulated once per modulus.
  const auto cp = period_table(p);
  const auto cq = period_table(q);
  out.brute.resize(static_cast<std::size_t>(m));
  for (std::int64_t n = 0; n < m; ++n) {
    const std::int64_t v = cp[n - alpha1] * cq[n - alpha2];
    out.brute[static_cast<std::size_t>(n)] = v;
    const std::int64_t predicted = out.predicted.values[static_cast<std::size_t>(n)];
    if (!out.mismatch && v != predicted) out.mismatch = Mismatch{n, v, predicted};
  }
  return out;
}

std::optional<std::int64_t> find_cyclic_shift(std::span<const std::int64_t> values,
                                              std::span<const std::int64_t> period) {
  const auto m = static_cast<std::int64_t>(period.size());
  require(m >= 1 && values.size() == period.size(), "cyclic shift search needs equal, non-empty lengths");
  for (std::int64_t s = 0; s < m; ++s) {
    // values[s] must equal period[0]; skip candidates that fail it cheaply.
    if (values[static_cast<std::size_t>(s)] != period[0]) continue;
    bool match = true;
    for (std::int64_t n = 0; n < m && match; ++n) {
      match = values[static_cast<std::size_t>(n)] == period[static_cast<std::size_t>(mod_floor(n - s, m))];
    }
    if (match) return s;
  }
  return std::nullopt;
}

}  // namespace ramsum
