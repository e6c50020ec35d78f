// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/arith.hpp"
#include "core/error.hpp"
#include "core/signal_io.hpp"
#include "doctest.h"

using namespace ramsum;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("ramsum_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<double> samples_of(const Signal& s) { return {s.samples().begin(), s.samples().end()}; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string parse_message(std::string_view text) {
  try {
    parse_signal(text, "sig.txt");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("parse_signal layouts") {
  CHECK(samples_of(parse_signal("1\n2\n3\n")) == std::vector<double>{1, 2, 3});
  CHECK(samples_of(parse_signal("0,1,2,3")) == std::vector<double>{0, 1, 2, 3});
  CHECK(samples_of(parse_signal("# ramp\n0\n1\n")) == std::vector<double>{0, 1});
  CHECK(samples_of(parse_signal("1.5\r\n-2e-3\r\n\r\n  # note\r\n+4, 5 ,6\r\n")) ==
        std::vector<double>{1.5, -2e-3, 4, 5, 6});
  CHECK(parse_signal("7").boundary() == Boundary::Replicate);
}

TEST_CASE("parse_signal diagnostics name line and column") {
  CHECK(parse_message("1\n2\nabc\n") == "sig.txt:3:1: not a number: 'abc'");
  CHECK(parse_message("1,2, x3") == "sig.txt:1:6: not a number: 'x3'");
  CHECK(parse_message("1,,2") == "sig.txt:1:3: empty field");
  CHECK(parse_message("nan") == "sig.txt:1:1: non-finite value 'nan'");
  CHECK(parse_message("1\ninf") == "sig.txt:2:1: non-finite value 'inf'");
  CHECK(parse_message("1e999") == "sig.txt:1:1: not a number: '1e999'");
  CHECK(parse_message("") == "sig.txt: no samples");
  CHECK(parse_message("# only a comment\n\n") == "sig.txt: no samples");
}

TEST_CASE("write formats") {
  CHECK(format_signal(std::vector<double>{0, 0, 0}) == "0\n0\n0\n");
  CHECK(format_signal(std::vector<double>{-0.0, 0.1, 1e20}) == "0\n0.1\n1e+20\n");
  const auto p3 = period_table(3);
  CHECK(format_table(p3.values()) == "2\n-1\n-1\n");
}

TEST_CASE("file round trip") {
  TempDir dir;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-100.0, 100.0);
  std::vector<double> xs(1000);
  for (auto& x : xs) x = d(rng);
  const auto path = dir.path / "signal.txt";
  write_signal(Signal(xs), path);
  const auto back = read_signal(path);
  REQUIRE(back.size() == xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(back[i] - xs[i]));
  CHECK(worst < 1e-9);

  const auto table = dir.path / "table.txt";
  const std::vector<std::int64_t> ints = {2, -1, -1, std::int64_t{1} << 60};
  write_table(ints, table);
  CHECK(slurp(table) == "2\n-1\n-1\n1152921504606846976\n");
}

TEST_CASE("I/O errors carry the path") {
  TempDir dir;
  try {
    read_signal(dir.path / "missing.txt");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Io);
    CHECK(std::string(e.what()).find("missing.txt") != std::string::npos);
  }
  CHECK_THROWS_AS(write_signal(Signal({1.0}), dir.path / "no" / "such" / "dir.txt"), Error);
}
