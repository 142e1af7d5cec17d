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

#include <random>

#include "stabkit/gf2_matrix.hpp"

using stabkit::BitVector;
using stabkit::GF2Matrix;

namespace {

GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  GF2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
  }
  return m;
}

}  // namespace

TEST_CASE("rank of identity and of dependent rows") {
  CHECK(GF2Matrix::identity(5).rank() == 5);
  GF2Matrix m(3, 4);
  m.row(0) = BitVector(4);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  // row 2 = row 0 + row 1
  m.set(2, 0, true);
  m.set(2, 2, true);
  CHECK(m.rank() == 2);
}

TEST_CASE("null space vectors are annihilated and complete") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const GF2Matrix m = random_matrix(4, 7, rng);
    const auto basis = m.null_space();
    CHECK(basis.size() == 7 - m.rank());
    for (const auto& v : basis) {
      CHECK_FALSE(m.apply_right(v).any());
    }
  }
}

TEST_CASE("solve returns a solution exactly when one exists") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const GF2Matrix m = random_matrix(5, 6, rng);
    BitVector x(6);
    for (std::size_t i = 0; i < 6; ++i) x.set(i, rng() & 1);
    const BitVector b = m.apply_right(x);
    const auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    CHECK(m.apply_right(*sol) == b);
  }
}

TEST_CASE("solve_lex_min agrees with brute force over the whole solution space") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t cols = 8;
    const GF2Matrix m = random_matrix(4, cols, rng);
    BitVector xseed(cols);
    for (std::size_t i = 0; i < cols; ++i) xseed.set(i, rng() & 1);
    const BitVector b = m.apply_right(xseed);

    // Brute-force oracle: scan all 2^8 vectors for solutions, keep lex-min.
    bool found = false;
    BitVector best(cols);
    for (std::size_t mask = 0; mask < (std::size_t{1} << cols); ++mask) {
      BitVector v(cols);
      for (std::size_t i = 0; i < cols; ++i) v.set(i, (mask >> i) & 1);
      if (m.apply_right(v) == b) {
        if (!found || v.lex_less(best)) best = v;
        found = true;
      }
    }
    const auto sol = m.solve_lex_min(b);
    REQUIRE(sol.has_value() == found);
    CHECK(*sol == best);
  }
}

TEST_CASE("inconsistent systems yield nullopt") {
  GF2Matrix m(2, 3);
  m.set(0, 0, true);
  m.set(1, 0, true);  // identical rows
  BitVector b(2);
  b.set(0, true);  // contradictory rhs
  CHECK_FALSE(m.solve(b).has_value());
  CHECK_FALSE(m.solve_lex_min(b).has_value());
}

TEST_CASE("matrix multiply and transpose are consistent") {
  std::mt19937_64 rng(53);
  const GF2Matrix a = random_matrix(4, 5, rng);
  const GF2Matrix b = random_matrix(5, 3, rng);
  const GF2Matrix ab = a.multiply(b);
  CHECK(ab.transpose() == b.transpose().multiply(a.transpose()));
}

TEST_CASE("in_row_space matches explicit membership") {
  std::mt19937_64 rng(59);
  const GF2Matrix m = random_matrix(3, 6, rng);
  for (std::size_t mask = 0; mask < 8; ++mask) {
    BitVector combo(6);
    for (std::size_t r = 0; r < 3; ++r) {
      if ((mask >> r) & 1) combo ^= m.row(r);
    }
    CHECK(m.in_row_space(combo));
  }
}
