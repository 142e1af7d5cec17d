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
#include <set>

#include "stabkit/registry.hpp"
#include "stabkit/simulate.hpp"
#include "stabkit/symplectic.hpp"
#include "stabkit/tableau.hpp"

using stabkit::Circuit;
using stabkit::PauliOperator;
using stabkit::Tableau;

TEST_CASE("H maps the |0> stabilizer Z to X") {
  Tableau t(1);
  t.apply_h(0);
  const auto x = t.deterministic_outcome(PauliOperator::parse("X"));
  REQUIRE(x.has_value());
  CHECK(*x == +1);
  CHECK_FALSE(t.deterministic_outcome(PauliOperator::parse("Z")).has_value());
}

TEST_CASE("H conjugates Y to -Y") {
  // |0> -> H -> P leaves the state stabilized by +Y; another H flips it.
  Tableau t(1);
  t.apply_h(0);
  t.apply_p(0);
  auto y = t.deterministic_outcome(PauliOperator::parse("Y"));
  REQUIRE(y.has_value());
  CHECK(*y == +1);
  t.apply_h(0);
  y = t.deterministic_outcome(PauliOperator::parse("Y"));
  REQUIRE(y.has_value());
  CHECK(*y == -1);
}

TEST_CASE("CNOT propagates X forward and Z backward") {
  // |+>|0> becomes the Bell pair: stabilizers XX and ZZ.
  Tableau t(2);
  t.apply_h(0);
  t.apply_cnot(0, 1);
  auto xx = t.deterministic_outcome(PauliOperator::parse("XX"));
  auto zz = t.deterministic_outcome(PauliOperator::parse("ZZ"));
  REQUIRE(xx.has_value());
  REQUIRE(zz.has_value());
  CHECK(*xx == +1);
  CHECK(*zz == +1);
}

TEST_CASE("measurement of Z on |+> is uniformly random and collapses") {
  std::set<int> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    std::mt19937_64 rng(seed);
    Tableau t(1);
    t.apply_h(0);
    CHECK_FALSE(t.deterministic_outcome(PauliOperator::parse("Z")).has_value());
    const int outcome = t.measure_pauli(PauliOperator::parse("Z"), rng);
    seen.insert(outcome);
    // Post-state is stabilized by the signed Z; remeasuring is
    // deterministic with the same result.
    const auto again = t.deterministic_outcome(PauliOperator::parse("Z"));
    REQUIRE(again.has_value());
    CHECK(*again == outcome);
    CHECK(t.is_valid());
  }
  CHECK(seen.size() == 2);
}

TEST_CASE("measuring the five-qubit generators reads out the syndrome of an injected X") {
  const auto& code = stabkit::five_qubit_code();
  std::mt19937_64 rng(17);
  Tableau t(5);
  // Project |00000> into the code space by forcing +1 outcomes.
  for (const auto& g : code.generators()) t.measure_pauli_forced(g, +1);
  t.apply_pauli_gate(PauliOperator::single(5, 0, 'X'));
  stabkit::BitVector synd(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const int outcome = t.measure_pauli(code.generator(i), rng);
    synd.set(i, outcome < 0);
  }
  CHECK(synd == code.syndrome(PauliOperator::single(5, 0, 'X')));
}

TEST_CASE("random circuits preserve tableau validity and the symplectic form") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = stabkit::random_clifford_circuit(6, 40, 0, rng);
    Tableau t(6);
    std::mt19937_64 run_rng(trial);
    stabkit::run_tableau(c, t, run_rng);
    CHECK(t.is_valid());

    // The tableau's row bits evolve exactly by the circuit's symplectic
    // matrix.
    const auto m = stabkit::symplectic_of(c, 6);
    CHECK(stabkit::is_symplectic(m));
    Tableau fresh(6);
    for (std::size_t i = 0; i < 6; ++i) {
      const auto initial = stabkit::symplectic_row(fresh.stabilizer_row(i));
      const auto predicted = m.transpose().apply_right(initial);  // initial * M
      CHECK(stabkit::symplectic_row(t.stabilizer_row(i)) == predicted);
    }
  }
}

TEST_CASE("measurements are idempotent") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = stabkit::random_clifford_circuit(5, 30, 0, rng);
    Tableau t(5);
    std::mt19937_64 run_rng(trial + 100);
    stabkit::run_tableau(c, t, run_rng);
    stabkit::BitVector x(5), z(5);
    for (std::size_t q = 0; q < 5; ++q) {
      x.set(q, rng() & 1);
      z.set(q, rng() & 1);
    }
    PauliOperator m = PauliOperator::from_xz(5, x, z);
    if (m.is_identity()) continue;
    const int first = t.measure_pauli(m, run_rng);
    const auto second = t.deterministic_outcome(m);
    REQUIRE(second.has_value());
    CHECK(*second == first);
    CHECK(t.is_valid());
  }
}

TEST_CASE("same_state recognizes equal and unequal stabilizer states") {
  Tableau a(2), b(2);
  a.apply_h(0);
  a.apply_cnot(0, 1);
  b.apply_h(0);
  b.apply_cnot(0, 1);
  CHECK(a.same_state(b));
  b.apply_pauli_gate(PauliOperator::parse("XI"));
  CHECK_FALSE(a.same_state(b));
}

TEST_CASE("forced measurement places the signed operator in the stabilizer") {
  Tableau t(3);
  t.apply_h(0);
  const auto m = PauliOperator::parse("XXI");
  t.measure_pauli_forced(m, -1);
  const auto out = t.deterministic_outcome(m);
  REQUIRE(out.has_value());
  CHECK(*out == -1);
  CHECK(t.is_valid());
}
