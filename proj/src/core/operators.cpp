// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/operators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "core/arith.hpp"
#include "core/error.hpp"

namespace ramsum {

namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_range(std::int64_t a, std::int64_t b) {
  return "[" + std::to_string(a) + ", " + std::to_string(b) + "]";
}

Signal generate(std::size_t length, auto&& f) {
  std::vector<double> xs(length);
  for (std::size_t i = 0; i < length; ++i) xs[i] = f(static_cast<double>(i));
  return Signal(std::move(xs), Boundary::Replicate);
}

// Interior outputs all within tolerance of `target`; returns the worst index.
Check interior_equals(const std::string& name, const Signal& y, InteriorRange in, double target,
                      const std::string& expected) {
  double worst = 0.0;
  std::int64_t worst_at = in.first;
  for (std::int64_t n = in.first; n <= in.last; ++n) {
    const double d = std::abs(y[static_cast<std::size_t>(n)] - target);
    if (d > worst) {
      worst = d;
      worst_at = n;
    }
  }
  Check c{name, expected, {}, worst <= kConvolutionTolerance};
  if (c.passed) {
    c.observed = fmt_real(target) + " on interior " + fmt_range(in.first, in.last);
  } else {
    c.observed = fmt_real(y[static_cast<std::size_t>(worst_at)]) + " at n=" + std::to_string(worst_at);
  }
  return c;
}

Check step_onset(const RamanujanKernel& k, std::size_t length) {
  const auto n0 = static_cast<std::int64_t>(length / 2);
  const std::int64_t q = k.modulus();
  const Signal x = generate(length, [&](double n) { return n >= static_cast<double>(n0) ? 1.0 : 0.0; });
  const Signal y = apply(k, x);
  const InteriorRange in = interior(k, length);

  // Indices whose kernel support straddles the edge.
  const std::int64_t lo = n0 - k.anchor();
  const std::int64_t hi = lo + q - 1;

  std::int64_t stray = -1;
  for (std::int64_t n = in.first; n <= in.last; ++n) {
    if ((n < lo || n > hi) && std::abs(y[static_cast<std::size_t>(n)]) > kConvolutionTolerance) {
      stray = n;
      break;
    }
  }
  std::int64_t onset = -1;
  for (std::int64_t n = n0; n <= n0 + q - 1 && n < static_cast<std::int64_t>(length); ++n) {
    if (std::abs(y[static_cast<std::size_t>(n)]) > kConvolutionTolerance) {
      onset = n;
      break;
    }
  }

  Check c{"step onset",
          "nonzero in " + fmt_range(n0, n0 + q - 1) + ", zero elsewhere on interior", {}, false};
  if (stray >= 0) {
    c.observed = "nonzero " + fmt_real(y[static_cast<std::size_t>(stray)]) + " away from onset at n=" +
                 std::to_string(stray);
  } else if (onset < 0) {
    c.observed = "zero throughout the onset window";
  } else {
    c.observed = fmt_real(y[static_cast<std::size_t>(onset)]) + " at n=" + std::to_string(onset);
    c.passed = true;
  }
  return c;
}

void require_length(std::int64_t q, std::size_t length) {
  require(length >= static_cast<std::size_t>(3 * q),
          "verification signal length " + std::to_string(length) + " is shorter than 3q = " +
              std::to_string(3 * q));
}

}  // namespace

RamanujanKernel RamanujanKernel::first(std::int64_t q) {
  require(q >= 2, "first-derivative kernel needs q >= 2, got " + std::to_string(q));
  const auto period = period_table(q);
  return RamanujanKernel(q, Variant::FirstDerivative, 0, {period.values().begin(), period.values().end()});
}

RamanujanKernel RamanujanKernel::second(std::int64_t q) {
  require(q >= 3, "second-derivative kernel needs q >= 3, got " + std::to_string(q));
  require(q % 2 == 1, "second-derivative kernel needs odd q, got " + std::to_string(q));
  const auto period = period_table(q);
  const std::int64_t shift = (q - 1) / 2;
  std::vector<std::int64_t> taps(static_cast<std::size_t>(q));
  for (std::int64_t n = 0; n < q; ++n) taps[static_cast<std::size_t>(n)] = period[n - shift];
  return RamanujanKernel(q, Variant::SecondDerivative, shift, std::move(taps));
}

RamanujanKernel RamanujanKernel::make(std::int64_t q, Variant variant) {
  return variant == Variant::FirstDerivative ? first(q) : second(q);
}

Signal::Signal(std::vector<double> samples, Boundary boundary)
    : samples_(std::move(samples)), boundary_(boundary) {
  require(!samples_.empty(), "signal must contain at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    require(std::isfinite(samples_[i]), "signal sample " + std::to_string(i) + " is not finite");
  }
}

double Signal::extended(std::int64_t i) const noexcept {
  const auto n = static_cast<std::int64_t>(samples_.size());
  if (i >= 0 && i < n) return samples_[static_cast<std::size_t>(i)];
  switch (boundary_) {
    case Boundary::ZeroPad:
      return 0.0;
    case Boundary::Replicate:
      return samples_[i < 0 ? 0 : samples_.size() - 1];
    case Boundary::PeriodicWrap:
      return samples_[static_cast<std::size_t>(mod_floor(i, n))];
  }
  return 0.0;
}

Signal apply(const RamanujanKernel& kernel, const Signal& x) {
  const auto taps = kernel.taps();
  const auto len = static_cast<std::int64_t>(x.size());
  const auto q = static_cast<std::int64_t>(taps.size());
  std::vector<double> out(x.size());
  for (std::int64_t n = 0; n < len; ++n) {
    const std::int64_t base = n + kernel.anchor();
    double acc = 0.0;
    for (std::int64_t k = 0; k < q; ++k) {
      const std::int64_t t = taps[static_cast<std::size_t>(k)];
      if (t != 0) acc += static_cast<double>(t) * x.extended(base - k);
    }
    out[static_cast<std::size_t>(n)] = acc;
  }
  return Signal(std::move(out), x.boundary());
}

InteriorRange interior(const RamanujanKernel& kernel, std::size_t length) noexcept {
  const auto len = static_cast<std::int64_t>(length);
  return {kernel.modulus() - 1 - kernel.anchor(), len - 1 - kernel.anchor()};
}

double ramp_constant(std::int64_t q) {
  require(q >= 2, "ramp_constant needs q >= 2, got " + std::to_string(q));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
  std::complex<double> acc{};
  for (std::int64_t k = 1; k < q; ++k) {
    if (std::gcd(k, q) != 1) continue;
    const double angle = step * static_cast<double>(k);
    acc += static_cast<double>(q) / (1.0 - std::polar(1.0, angle));
  }
  if (std::abs(acc.imag()) >= kOracleTolerance) {
    fail(Errc::Numeric, "ramp_constant: imaginary residue " + fmt_real(acc.imag()) + " at q=" + std::to_string(q));
  }
  return acc.real();
}

std::int64_t first_moment(const RamanujanKernel& kernel) {
  std::int64_t acc = 0;
  const auto taps = kernel.taps();
  for (std::size_t l = 0; l < taps.size(); ++l) acc -= checked_mul(static_cast<std::int64_t>(l), taps[l]);
  return acc;
}

bool VerificationReport::passed() const noexcept {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerificationReport verify_first_derivative(std::int64_t q, std::size_t length) {
  const auto k = RamanujanKernel::first(q);
  require_length(q, length);
  const InteriorRange in = interior(k, length);
  VerificationReport report{q, {}};

  const Signal flat = generate(length, [](double) { return 3.5; });
  report.checks.push_back(interior_equals("constant", apply(k, flat), in, 0.0, "0 on interior"));

  report.checks.push_back(step_onset(k, length));

  const double expected = ramp_constant(q);
  const Signal ramp = generate(length, [](double n) { return n; });
  report.checks.push_back(
      interior_equals("ramp", apply(k, ramp), in, expected, fmt_real(expected) + " on interior"));
  return report;
}

VerificationReport verify_second_derivative(std::int64_t q, std::size_t length) {
  const auto k = RamanujanKernel::second(q);
  require_length(q, length);
  const InteriorRange in = interior(k, length);
  const auto taps = k.taps();
  VerificationReport report{q, {}};

  bool palindrome = true;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < taps.size(); ++i) {
    if (taps[i] != taps[taps.size() - 1 - i]) {
      palindrome = false;
      bad = i;
      break;
    }
  }
  report.checks.push_back({"kernel symmetry", "taps[i] = taps[q-1-i]",
                           palindrome ? "symmetric"
                                      : "taps[" + std::to_string(bad) + "] = " + std::to_string(taps[bad]) +
                                            " vs " + std::to_string(taps[taps.size() - 1 - bad]),
                           palindrome});

  const std::int64_t total = std::accumulate(taps.begin(), taps.end(), std::int64_t{0});
  report.checks.push_back({"kernel zero sum", "0", std::to_string(total), total == 0});

  const Signal flat = generate(length, [](double) { return 3.5; });
  report.checks.push_back(interior_equals("constant", apply(k, flat), in, 0.0, "0 on interior"));

  report.checks.push_back(step_onset(k, length));

  const Signal ramp = generate(length, [](double n) { return n; });
  report.checks.push_back(interior_equals("ramp", apply(k, ramp), in, 0.0, "0 on interior"));

  // The quadratic response has no stated value; constancy is the property.
  const Signal quad = generate(length, [](double n) { return n * n; });
  const Signal y = apply(k, quad);
  const double level = y[static_cast<std::size_t>(in.first)];
  report.checks.push_back(interior_equals("quadratic", y, in, level, "one constant on interior"));
  return report;
}

const char* to_string(Variant v) noexcept {
  return v == Variant::FirstDerivative ? "first" : "second";
}

const char* to_string(Boundary b) noexcept {
  switch (b) {
    case Boundary::ZeroPad:
      return "zero";
    case Boundary::Replicate:
      return "replicate";
    case Boundary::PeriodicWrap:
      return "wrap";
  }
  return "?";
}

}  // namespace ramsum
