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

#include "stabkit/simulate.hpp"
#include "stabkit/symplectic.hpp"

using stabkit::Circuit;
using stabkit::PauliOperator;

TEST_CASE("identity circuit measures +1 on every Z") {
  Circuit c;
  c.n_qubits = 4;
  for (std::size_t q = 0; q < 4; ++q) c.measure_z(q);
  std::mt19937_64 rng(1);
  const auto result = stabkit::run_tableau(c, rng);
  REQUIRE(result.outcomes.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(result.outcomes[i] == +1);
    CHECK(result.deterministic[i]);
  }
}

TEST_CASE("bell circuit has deterministic XX and ZZ") {
  Circuit c;
  c.n_qubits = 2;
  c.h(0).cnot(0, 1).measure(PauliOperator::parse("XX")).measure(PauliOperator::parse("ZZ"));
  std::mt19937_64 rng(2);
  const auto result = stabkit::run_tableau(c, rng);
  CHECK(result.outcomes == std::vector<int>{+1, +1});
  CHECK(result.deterministic == std::vector<bool>{true, true});
}

TEST_CASE("tableau and dense engines agree on random circuits") {
  std::mt19937_64 gen_rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + gen_rng() % 7;
    const Circuit c = stabkit::random_clifford_circuit(n, 50, 3, gen_rng);
    const auto cmp = stabkit::clifford_vs_dense_check(c, 777 + trial);
    if (!cmp.agree) {
      FAIL_CHECK("mismatch: " << cmp.first_mismatch << "\n" << c.to_string());
    }
  }
}

TEST_CASE("empty circuit symplectic matrix is the identity") {
  Circuit c;
  c.n_qubits = 3;
  CHECK(stabkit::symplectic_of(c, 3) == stabkit::GF2Matrix::identity(6));
}

TEST_CASE("H symplectic matrix swaps the x and z blocks") {
  Circuit c;
  c.n_qubits = 1;
  c.h(0);
  const auto m = stabkit::symplectic_of(c, 1);
  CHECK_FALSE(m.get(0, 0));
  CHECK(m.get(0, 1));
  CHECK(m.get(1, 0));
  CHECK_FALSE(m.get(1, 1));
}

TEST_CASE("random circuits yield symplectic matrices and compose homomorphically") {
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit a = stabkit::random_clifford_circuit(6, 20, 0, rng);
    const Circuit b = stabkit::random_clifford_circuit(6, 20, 0, rng);
    const auto ma = stabkit::symplectic_of(a, 6);
    const auto mb = stabkit::symplectic_of(b, 6);
    CHECK(stabkit::is_symplectic(ma));
    CHECK(stabkit::is_symplectic(mb));
    Circuit ab = a;
    ab.append(b);
    // Conjugation is a group homomorphism: rows map through a then b.
    CHECK(stabkit::symplectic_of(ab, 6) == ma.multiply(mb));
  }
}

TEST_CASE("circuit text format round-trips") {
  Circuit c;
  c.n_qubits = 3;
  c.prep(0, '0').prep(1, '+').h(0).p(1).p_dagger(2).cnot(0, 2).wait(1);
  c.measure(PauliOperator::parse("XZI")).measure_z(2).t(1).t_dagger(1);
  const std::string text = c.to_string();
  const Circuit parsed = stabkit::parse_circuit_string(text);
  CHECK(parsed.to_string() == text);
  CHECK(parsed.n_qubits == 3);
  CHECK(parsed.locations.size() == c.locations.size());
}

TEST_CASE("circuit parser rejects malformed input") {
  CHECK_THROWS(stabkit::parse_circuit_string("QUBITS 2\nH 5\n"));
  CHECK_THROWS(stabkit::parse_circuit_string("QUBITS 2\nFLIP 0\n"));
  CHECK_THROWS(stabkit::parse_circuit_string("QUBITS 2\nPREP 0 2\n"));
  CHECK_THROWS(stabkit::parse_circuit_string("QUBITS 2\nMEAS XXX\n"));
}

TEST_CASE("non-Clifford circuits run on the dense engine and are rejected by tableau") {
  Circuit c;
  c.n_qubits = 1;
  c.h(0).t(0).h(0).measure_z(0);
  std::mt19937_64 rng(9);
  CHECK_THROWS_AS((void)stabkit::run_tableau(c, rng), std::invalid_argument);
  // cos^2(pi/8) bias: both outcomes possible, state stays normalized.
  const auto result = stabkit::run_dense(c, rng);
  CHECK(result.outcomes.size() == 1);
}

TEST_CASE("prep resets collapse previously entangled qubits") {
  Circuit c;
  c.n_qubits = 2;
  c.h(0).cnot(0, 1).prep(1, '0').measure_z(1);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    std::mt19937_64 rng(seed);
    const auto result = stabkit::run_tableau(c, rng);
    CHECK(result.outcomes[0] == +1);
  }
}
