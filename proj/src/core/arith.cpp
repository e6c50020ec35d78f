// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/arith.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace ramsum {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

// Enumerates k in [1, q] with gcd(k, q) = 1.
std::vector<std::int64_t> coprime_residues(std::int64_t q) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 1; k <= q; ++k) {
    if (std::gcd(k, q) == 1) ks.push_back(k);
  }
  return ks;
}

std::int64_t oracle_eval(std::int64_t q, std::span<const std::int64_t> ks, std::int64_t n) {
  const std::int64_t r = mod_floor(n, q);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
  double re = 0.0;
  double im = 0.0;
  for (const std::int64_t k : ks) {
    // Reduce k*r modulo q before forming the angle so that large q keeps
    // the argument within [0, 2*pi).
    const auto phase = static_cast<std::int64_t>((static_cast<wide_int>(k) * r) % q);
    const double angle = step * static_cast<double>(phase);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  const double rounded = std::nearbyint(re);
  if (std::abs(im) >= kOracleTolerance || std::abs(re - rounded) >= kOracleTolerance) {
    fail(Errc::Numeric, "sum_oracle: rounding residue exceeds tolerance at q=" + str(q) +
                            ", n=" + str(n) + " (re=" + std::to_string(re) +
                            ", im=" + std::to_string(im) + ")");
  }
  return static_cast<std::int64_t>(rounded);
}

// Prime closed form, p assumed prime.
std::int64_t prime_branch(std::int64_t p, std::int64_t n) noexcept {
  return mod_floor(n, p) == 0 ? p - 1 : -1;
}

// Prime-power lift, p assumed prime and l >= 1.
std::int64_t lift(std::int64_t p, int l, std::int64_t n) {
  const std::int64_t scale = checked_pow(p, l - 1);
  // Divisibility of n by p^(l-1) is unchanged by reducing n modulo p^l, so
  // n is used as given; p^l itself is never formed.
  if (n % scale != 0) return 0;
  return checked_mul(scale, prime_branch(p, n / scale));
}

void check_prime(std::int64_t p, const char* who) {
  if (!is_prime(p)) fail(Errc::InvalidArgument, std::string(who) + ": " + str(p) + " is not prime");
}

}  // namespace

Factorization::Factorization(std::int64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  require(n >= 1, "factorization of non-positive value " + str(n));
  std::int64_t product = 1;
  std::int64_t previous = 1;
  for (const auto& [p, r] : factors_) {
    require(p > previous, "factorization primes must be strictly increasing");
    require(r >= 1, "factorization exponents must be positive");
    require(is_prime(p), "factorization entry " + str(p) + " is not prime");
    product = checked_mul(product, checked_pow(p, r));
    previous = p;
  }
  require(product == n, "factorization product " + str(product) + " differs from " + str(n));
}

RamanujanPeriod::RamanujanPeriod(std::int64_t q, std::vector<std::int64_t> values)
    : q_(q), values_(std::move(values)) {
  require(q >= 1, "period modulus must be positive");
  require(values_.size() == static_cast<std::size_t>(q), "period length must equal the modulus");
}

std::int64_t RamanujanPeriod::operator[](std::int64_t n) const {
  return values_[static_cast<std::size_t>(mod_floor(n, q_))];
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(Errc::Overflow, "64-bit overflow in " + str(a) + " * " + str(b));
  }
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exponent) {
  require(exponent >= 0, "negative exponent");
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

std::int64_t mod_floor(std::int64_t n, std::int64_t q) noexcept {
  const std::int64_t r = n % q;
  return r < 0 ? r + q : r;
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Factorization factorize(std::int64_t n) {
  require(n >= 1, "factorize: n must be positive, got " + str(n));
  std::vector<PrimePower> out;
  std::int64_t rest = n;
  auto strip = [&](std::int64_t d) {
    int r = 0;
    while (rest % d == 0) {
      rest /= d;
      ++r;
    }
    if (r > 0) out.push_back({d, r});
  };
  strip(2);
  strip(3);
  for (std::int64_t d = 5; d <= rest / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (rest > 1) out.push_back({rest, 1});
  return Factorization(n, std::move(out));
}

std::int64_t totient(std::int64_t q) {
  const auto f = factorize(q);
  std::int64_t phi = 1;
  for (const auto& [p, r] : f.factors()) phi = checked_mul(phi, checked_mul(checked_pow(p, r - 1), p - 1));
  return phi;
}

std::int64_t sum_oracle(std::int64_t q, std::int64_t n) {
  require(q >= 1, "sum_oracle: q must be positive, got " + str(q));
  const auto ks = coprime_residues(q);
  return oracle_eval(q, ks, n);
}

std::vector<std::int64_t> sum_oracle_many(std::int64_t q, std::span<const std::int64_t> ns) {
  require(q >= 1, "sum_oracle: q must be positive, got " + str(q));
  const auto ks = coprime_residues(q);
  std::vector<std::int64_t> out;
  out.reserve(ns.size());
  for (const std::int64_t n : ns) out.push_back(oracle_eval(q, ks, n));
  return out;
}

std::int64_t sum_prime(std::int64_t p, std::int64_t n) {
  check_prime(p, "sum_prime");
  return prime_branch(p, n);
}

std::int64_t sum_prime_power(std::int64_t p, int l, std::int64_t n) {
  check_prime(p, "sum_prime_power");
  require(l >= 1, "sum_prime_power: exponent must be positive, got " + std::to_string(l));
  return lift(p, l, n);
}

std::int64_t sum_factored(const Factorization& q, std::int64_t n) {
  std::int64_t out = 1;
  for (const auto& [p, r] : q.factors()) {
    const std::int64_t term = lift(p, r, n);
    if (term == 0) return 0;
    out = checked_mul(out, term);
  }
  return out;
}

std::int64_t sum_fast(std::int64_t q, std::int64_t n) {
  require(q >= 1, "sum_fast: q must be positive, got " + str(q));
  return sum_factored(factorize(q), n);
}

RamanujanPeriod period_table(std::int64_t q) {
  require(q >= 1, "period_table: q must be positive, got " + str(q));
  const auto f = factorize(q);
  std::vector<std::int64_t> values(static_cast<std::size_t>(q));
  for (std::int64_t n = 0; n < q; ++n) values[static_cast<std::size_t>(n)] = sum_factored(f, n);
  return RamanujanPeriod(q, std::move(values));
}

}  // namespace ramsum
