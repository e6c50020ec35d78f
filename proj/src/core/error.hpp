// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ramsum {

enum class Errc {
  InvalidArgument,
  Overflow,
  Io,
  Parse,
  Numeric,
};

/// Base exception for every failure raised by the core library. The C API
/// maps `code()` one-to-one onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(Errc::InvalidArgument, what);
}

}  // namespace ramsum
