// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace ramsum {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(const std::string& origin, std::size_t line, std::size_t col, const std::string& msg) {
  fail(Errc::Parse, origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::Io, "cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) fail(Errc::Io, "write to '" + path.string() + "' failed");
}

}  // namespace

Signal parse_signal(std::string_view text, const std::string& origin) {
  std::vector<double> samples;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;

    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t comma = line.find(',', start);
      const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
      const std::string_view raw = line.substr(start, end - start);
      const std::string_view token = trim(raw);
      const std::size_t col = start + static_cast<std::size_t>(token.data() - raw.data()) + 1;
      if (token.empty()) parse_error(origin, line_no, col, "empty field");

      double v = 0.0;
      const char* first = token.data();
      const char* last = token.data() + token.size();
      if (*first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last) {
        parse_error(origin, line_no, col, "not a number: '" + std::string(token) + "'");
      }
      if (!std::isfinite(v)) parse_error(origin, line_no, col, "non-finite value '" + std::string(token) + "'");
      samples.push_back(v);

      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (samples.empty()) fail(Errc::Parse, origin + ": no samples");
  return Signal(std::move(samples), Boundary::Replicate);
}

Signal read_signal(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(Errc::Io, "read from '" + path.string() + "' failed");
  return parse_signal(buf.str(), path.string());
}

std::string format_signal(std::span<const double> samples) {
  std::string out;
  char buf[64];
  for (const double v : samples) {
    // Avoid printing "-0".
    std::snprintf(buf, sizeof buf, "%.12g\n", v == 0.0 ? 0.0 : v);
    out += buf;
  }
  return out;
}

std::string format_table(std::span<const std::int64_t> values) {
  std::string out;
  for (const std::int64_t v : values) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void write_signal(const Signal& signal, const std::filesystem::path& path) {
  write_text(path, format_signal(signal.samples()));
}

void write_table(std::span<const std::int64_t> values, const std::filesystem::path& path) {
  write_text(path, format_table(values));
}

}  // namespace ramsum
