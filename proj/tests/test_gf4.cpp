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

#include <array>
#include <random>

#include "stabkit/gf4.hpp"

using stabkit::GF4;
using stabkit::GF4Vector;
using stabkit::PauliOperator;

TEST_CASE("GF(4) field identities") {
  CHECK(GF4::omega * GF4::omega == GF4::omega2);
  CHECK(GF4::omega * GF4::omega * GF4::omega == GF4::one);  // w^3 = 1
  CHECK(GF4::omega + GF4::omega2 == GF4::one);              // w + w2 = 1
  CHECK(GF4::omega * GF4::omega2 == GF4::one);
  for (std::uint8_t v = 0; v < 4; ++v) {
    const GF4 x(v);
    CHECK(x + x == GF4::zero);
    CHECK(x * GF4::one == x);
    CHECK(x * GF4::zero == GF4::zero);
  }
}

TEST_CASE("conjugation swaps the roots and trace hits w, w2 only") {
  CHECK(GF4::zero.conj() == GF4::zero);
  CHECK(GF4::one.conj() == GF4::one);
  CHECK(GF4::omega.conj() == GF4::omega2);
  CHECK(GF4::omega2.conj() == GF4::omega);
  CHECK_FALSE(GF4::zero.trace());
  CHECK_FALSE(GF4::one.trace());
  CHECK(GF4::omega.trace());
  CHECK(GF4::omega2.trace());
}

TEST_CASE("gf4_encode maps IZXY to (0, 1, w, w2)") {
  const auto v = gf4_encode(PauliOperator::parse("IZXY"));
  REQUIRE(v.size() == 4);
  CHECK(v.entries[0] == GF4::zero);
  CHECK(v.entries[1] == GF4::one);
  CHECK(v.entries[2] == GF4::omega);
  CHECK(v.entries[3] == GF4::omega2);
}

TEST_CASE("identity encodes to the zero vector") {
  const auto v = gf4_encode(PauliOperator(6));
  for (const auto& e : v.entries) CHECK(e == GF4::zero);
}

TEST_CASE("round trip pauli -> gf4 -> pauli") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    stabkit::BitVector x(8), z(8);
    for (std::size_t q = 0; q < 8; ++q) {
      x.set(q, rng() & 1);
      z.set(q, rng() & 1);
    }
    const PauliOperator p(8, x, z);
    CHECK(gf4_decode(gf4_encode(p)).equals_up_to_phase(p));
  }
}

TEST_CASE("encode is a homomorphism from products to sums") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    stabkit::BitVector x1(6), z1(6), x2(6), z2(6);
    for (std::size_t q = 0; q < 6; ++q) {
      x1.set(q, rng() & 1);
      z1.set(q, rng() & 1);
      x2.set(q, rng() & 1);
      z2.set(q, rng() & 1);
    }
    const PauliOperator p(6, x1, z1), q(6, x2, z2);
    CHECK(gf4_encode(p.multiply(q)) == gf4_encode(p) + gf4_encode(q));
  }
}

TEST_CASE("trace inner product examples") {
  GF4Vector w{{GF4::omega}};
  CHECK_FALSE(trace_inner(w, w));  // tr(w * w2) = tr(1) = 0
  GF4Vector zero{{GF4::zero, GF4::zero, GF4::zero}};
  GF4Vector any{{GF4::one, GF4::omega, GF4::omega2}};
  CHECK_FALSE(trace_inner(zero, any));
}

TEST_CASE("trace inner product vanishes exactly for commuting pairs (all 1-qubit pairs)") {
  const std::array<const char*, 4> letters = {"I", "X", "Y", "Z"};
  for (const char* a : letters) {
    for (const char* b : letters) {
      const auto m = PauliOperator::parse(a);
      const auto n = PauliOperator::parse(b);
      CHECK((trace_inner(gf4_encode(m), gf4_encode(n)) == false) == m.commutes_with(n));
    }
  }
}

TEST_CASE("five-qubit code rows have pairwise zero trace inner product") {
  const std::array<const char*, 4> rows = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  for (const char* a : rows) {
    for (const char* b : rows) {
      const auto u = gf4_encode(PauliOperator::parse(a));
      const auto v = gf4_encode(PauliOperator::parse(b));
      CHECK_FALSE(trace_inner(u, v));
    }
  }
}
