// Copyright 2026 The stabkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "stabkit/bounds.hpp"

using stabkit::BigInt;

TEST_CASE("hamming bound holds with equality for [[5,1]] at t=1") {
  CHECK(stabkit::hamming_bound(5, 1, 1));
  CHECK(stabkit::hamming_bound_equality(5, 1, 1));
  CHECK(stabkit::pauli_sphere_size(5, 1) * 2 == BigInt(32));
}

TEST_CASE("hamming bound rules out [[4,1]] at t=1") {
  CHECK_FALSE(stabkit::hamming_bound(4, 1, 1));
}

TEST_CASE("singleton bound rejects [[4,1,3]]") {
  CHECK_FALSE(stabkit::singleton_bound(4, 1, 3));
  CHECK(stabkit::singleton_bound(5, 1, 3));
  CHECK(stabkit::singleton_bound(7, 1, 3));
  CHECK(stabkit::singleton_bound(9, 1, 3));
}

TEST_CASE("gv bound does not promise a [[9,1,3]] code") {
  // 704 > 512 by direct big-integer arithmetic.
  CHECK(stabkit::pauli_sphere_size(9, 2) * 2 == BigInt(704));
  CHECK_FALSE(stabkit::gv_bound(9, 1, 3));
  // But it does promise [[10,1,3]].
  CHECK(stabkit::gv_bound(10, 1, 3));
}

TEST_CASE("binomial coefficients are exact") {
  CHECK(stabkit::binomial(9, 2) == BigInt(36));
  CHECK(stabkit::binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(stabkit::binomial(3, 5) == BigInt(0));
}

TEST_CASE("asymptotic rate bounds behave at the edges") {
  auto [lo, hi] = stabkit::asymptotic_rate_bounds(0.01);
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  CHECK(lo <= hi);

  auto [lo2, hi2] = stabkit::asymptotic_rate_bounds(0.25);
  CHECK(lo2 == 0.0);  // clamped: 1 - 0.5 log2(3) - H(1/2) < 0
  CHECK(hi2 == 0.0);  // the window closes before p reaches 1/4

  auto [lo3, hi3] = stabkit::asymptotic_rate_bounds(0.05);
  CHECK(lo3 > 0.0);
  CHECK(hi3 > lo3);

  CHECK_THROWS_AS((void)stabkit::asymptotic_rate_bounds(0.0), std::domain_error);
  CHECK_THROWS_AS((void)stabkit::asymptotic_rate_bounds(0.3), std::domain_error);
  CHECK_THROWS_AS((void)stabkit::asymptotic_rate_bounds(-0.1), std::domain_error);
}

TEST_CASE("rate bounds are monotone decreasing in p") {
  double prev_lo = 1.0, prev_hi = 1.0;
  for (double p = 0.01; p <= 0.24; p += 0.01) {
    auto [lo, hi] = stabkit::asymptotic_rate_bounds(p);
    CHECK(lo <= prev_lo + 1e-12);
    CHECK(hi <= prev_hi + 1e-12);
    prev_lo = lo;
    prev_hi = hi;
  }
}
