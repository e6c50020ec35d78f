// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Plain-text signal and table files.
//
// Input: one sample per line, or comma-separated samples on a line (both
// may be mixed). Blank lines and lines whose first non-blank character is
// '#' are skipped. CRLF is accepted. Output: one value per line, LF, reals
// with 12 significant digits, integers exact.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "core/operators.hpp"

namespace ramsum {

/// Parses file contents; `origin` names the source in diagnostics.
Signal parse_signal(std::string_view text, const std::string& origin = "<input>");

Signal read_signal(const std::filesystem::path& path);

std::string format_signal(std::span<const double> samples);
std::string format_table(std::span<const std::int64_t> values);

void write_signal(const Signal& signal, const std::filesystem::path& path);
void write_table(std::span<const std::int64_t> values, const std::filesystem::path& path);

}  // namespace ramsum
