// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Ramanujan derivative operators.
//
// The first-derivative kernel is one period of c_q(n) applied causally:
//     y(n) = sum_{k=0}^{q-1} c_q(k) x(n - k)
// The second-derivative kernel (odd q only) is one period of c_q shifted by
// (q-1)/2, which is symmetric and zero-sum, and is applied centered so that
// the response to a feature sits on the feature:
//     y(n) = sum_{k=0}^{q-1} taps[k] x(n + (q-1)/2 - k)

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ramsum {

enum class Variant { FirstDerivative, SecondDerivative };

enum class Boundary { ZeroPad, Replicate, PeriodicWrap };

class RamanujanKernel {
 public:
  static RamanujanKernel first(std::int64_t q);
  static RamanujanKernel second(std::int64_t q);
  static RamanujanKernel make(std::int64_t q, Variant variant);

  std::int64_t modulus() const noexcept { return q_; }
  Variant variant() const noexcept { return variant_; }
  std::int64_t anchor() const noexcept { return anchor_; }
  std::span<const std::int64_t> taps() const noexcept { return taps_; }

 private:
  RamanujanKernel(std::int64_t q, Variant variant, std::int64_t anchor, std::vector<std::int64_t> taps)
      : q_(q), variant_(variant), anchor_(anchor), taps_(std::move(taps)) {}

  std::int64_t q_;
  Variant variant_;
  std::int64_t anchor_;
  std::vector<std::int64_t> taps_;
};

/// Finite, non-empty real sample sequence with its boundary-extension policy.
class Signal {
 public:
  explicit Signal(std::vector<double> samples, Boundary boundary = Boundary::Replicate);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  Boundary boundary() const noexcept { return boundary_; }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }

  /// Sample at any integer index, extended past the ends per the policy.
  double extended(std::int64_t i) const noexcept;

 private:
  std::vector<double> samples_;
  Boundary boundary_;
};

/// Output has the input's length and boundary policy.
Signal apply(const RamanujanKernel& kernel, const Signal& x);

/// Output indices whose value depends on in-range samples only.
struct InteriorRange {
  std::int64_t first = 0;
  std::int64_t last = -1;  // inclusive

  bool contains(std::int64_t n) const noexcept { return n >= first && n <= last; }
  bool empty() const noexcept { return last < first; }
};

InteriorRange interior(const RamanujanKernel& kernel, std::size_t length) noexcept;

/// Closed form of the first-derivative response to r(n) = n:
/// sum over k coprime to q of q / (1 - e^{j 2 pi k / q}).
double ramp_constant(std::int64_t q);

/// -sum_l l * taps[l]; the exact ramp response of a causal kernel.
std::int64_t first_moment(const RamanujanKernel& kernel);

inline constexpr double kConvolutionTolerance = 1e-9;

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool passed = false;
};

struct VerificationReport {
  std::int64_t modulus = 0;
  std::vector<Check> checks;

  bool passed() const noexcept;
};

/// Constant, step-onset and ramp checks. Requires length >= 3q.
VerificationReport verify_first_derivative(std::int64_t q, std::size_t length);

/// Kernel symmetry and zero sum, then constant, step-onset, ramp and
/// quadratic checks. Requires odd q >= 3 and length >= 3q.
VerificationReport verify_second_derivative(std::int64_t q, std::size_t length);

const char* to_string(Variant v) noexcept;
const char* to_string(Boundary b) noexcept;

}  // namespace ramsum
