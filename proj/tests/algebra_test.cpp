// Copyright 2026 The ramsum Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>
#include <vector>

#include "core/algebra.hpp"
#include "core/arith.hpp"
#include "core/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ramsum;
using ramsum::testing::divisor_sum_ramanujan;

TEST_CASE("ShiftedSequence reduces its shift") {
  CHECK(ShiftedSequence(5, 7).shift() == 2);
  CHECK(ShiftedSequence(5, -1).shift() == 4);
  CHECK(ShiftedSequence(1, 9).shift() == 0);
  CHECK_THROWS_AS(ShiftedSequence(0, 0), Error);
}

TEST_CASE("eval_shifted") {
  CHECK(eval_shifted(ShiftedSequence(3, 1), 1) == 2);
  CHECK(eval_shifted(ShiftedSequence(2, 0), 5) == -1);
  CHECK(eval_shifted(ShiftedSequence(5, 2), 2) == 4);
  for (std::int64_t n = -20; n <= 20; ++n) CHECK(eval_shifted(ShiftedSequence(12, 5), n) == sum_fast(12, n - 5));
}

TEST_CASE("predict_product examples") {
  const auto equal = predict_product(3, 2, 1, 1);
  CHECK(equal.modulus == 6);
  CHECK(equal.shift == 1);

  // Brute force c_3(n-1) c_2(n) over n = 0..5 is -1 -2 -1 1 2 1 = c_6(n-4).
  const auto unequal = predict_product(3, 2, 1, 0);
  CHECK(unequal.shift == 4);
  CHECK(unequal.values == std::vector<std::int64_t>{-1, -2, -1, 1, 2, 1});

  const auto plain = predict_product(5, 3, 0, 0);
  CHECK(plain.shift == 0);
  for (std::int64_t n = 0; n < 15; ++n) CHECK(plain.values[static_cast<std::size_t>(n)] == sum_fast(15, n));

  // q = 1 leaves c_p(n - a1).
  CHECK(predict_product(7, 1, 3, 0).shift == 3);
}

TEST_CASE("predict_product rejects invalid moduli") {
  CHECK_THROWS_AS(predict_product(2, 3, 0, 0), Error);
  CHECK_THROWS_AS(predict_product(3, 3, 0, 0), Error);
  CHECK_THROWS_AS(predict_product(6, 4, 0, 0), Error);
  CHECK_THROWS_AS(predict_product(5, 0, 0, 0), Error);
}

TEST_CASE("shift reduction") {
  for (std::int64_t a1 = -12; a1 <= 12; ++a1) {
    for (std::int64_t a2 = -6; a2 <= 6; ++a2) {
      CHECK(predict_product(7, 4, a1 + 7, a2).shift == predict_product(7, 4, a1, a2).shift);
      CHECK(predict_product(7, 4, a1, a2 + 4).shift == predict_product(7, 4, a1, a2).shift);
    }
  }
}

TEST_CASE("check_product") {
  CHECK(check_product(3, 2, 1, 1).equal());
  CHECK(check_product(3, 2, 0, 0).equal());

  // Exhaustive over n = 0..9, against the divisor-sum oracle.
  const auto c = check_product(5, 2, 1, 0);
  CHECK(c.equal());
  for (std::int64_t n = 0; n < 10; ++n) {
    CHECK(c.brute[static_cast<std::size_t>(n)] == divisor_sum_ramanujan(5, n - 1) * divisor_sum_ramanujan(2, n));
  }
  CHECK(c.predicted.shift == 6);
}

TEST_CASE("printed closed form agrees only for some moduli") {
  // For (3, 2) both -q = 1 (mod p) and p = 1 (mod q), so the quoted form holds.
  for (std::int64_t a1 = 0; a1 < 3; ++a1)
    for (std::int64_t a2 = 0; a2 < 2; ++a2)
      CHECK(printed_product_shift(3, 2, a1, a2) == product_shift(3, 2, a1, a2));
  CHECK(printed_product_shift(5, 2, 1, 0) == 8);
  CHECK(product_shift(5, 2, 1, 0) == 6);
  CHECK(printed_product_shift(5, 2, 1, 0, PrintedSign::Negated) == 2);
  // Equality is judged after reduction: (3 mod 5, 3 mod 2) = (3, 1) is unequal.
  CHECK(printed_product_shift(5, 2, 3, 3) == 9);
  CHECK(product_shift(5, 2, 3, 3) == 3);
}

TEST_CASE("find_cyclic_shift") {
  const auto c6 = period_table(6);
  std::vector<std::int64_t> v(6);
  for (std::int64_t n = 0; n < 6; ++n) v[static_cast<std::size_t>(n)] = c6[n - 5];
  CHECK(find_cyclic_shift(v, c6.values()) == 5);
  v[0] = 99;
  CHECK_FALSE(find_cyclic_shift(v, c6.values()).has_value());
}

TEST_CASE("every shifted product is predicted exactly, pq <= 150") {
  for (std::int64_t q = 1; q <= 12; ++q) {
    for (std::int64_t p = q + 1; p * q <= 150; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t a1 = 0; a1 < p; ++a1) {
        for (std::int64_t a2 = 0; a2 < q; ++a2) {
          const auto c = check_product(p, q, a1, a2);
          REQUIRE_MESSAGE(c.equal(), "p=" << p << " q=" << q << " a1=" << a1 << " a2=" << a2);
          REQUIRE(find_cyclic_shift(c.brute, period_table(p * q).values()) == c.predicted.shift);
        }
      }
    }
  }
}
