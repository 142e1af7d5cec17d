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

#ifndef STABKIT_SIMULATE_HPP
#define STABKIT_SIMULATE_HPP

#include <random>
#include <vector>

#include "stabkit/circuit.hpp"
#include "stabkit/dense_state.hpp"
#include "stabkit/tableau.hpp"

namespace stabkit {

struct ShotResult {
  std::vector<int> outcomes;        // +1/-1 per MEAS location
  std::vector<bool> deterministic;  // tableau engine only
};

/// Runs a Clifford circuit on the tableau engine. All qubits start |0>;
/// PREP locations reset.
ShotResult run_tableau(const Circuit& circuit, Tableau& tableau, std::mt19937_64& rng);
ShotResult run_tableau(const Circuit& circuit, std::mt19937_64& rng);

/// Runs any circuit (including T/TDG) on the dense engine.
ShotResult run_dense(const Circuit& circuit, DenseState& state, std::mt19937_64& rng,
                     std::size_t max_qubits = 16);
ShotResult run_dense(const Circuit& circuit, std::mt19937_64& rng, std::size_t max_qubits = 16);

/// Cross-validation of the two engines on one circuit:
///  - measurements the tableau calls deterministic must match the dense
///    probabilities exactly (0 or 1) and agree on the value;
///  - random measurements are taken with the tableau's sampled outcome
///    forced on the dense engine, whose branch probability must be 1/2;
///  - after the run, every tableau stabilizer must have dense expectation
///    +1 within tolerance.
struct OracleComparison {
  std::size_t circuits_checked = 0;
  std::size_t measurements_checked = 0;
  std::size_t deterministic_checked = 0;
  bool agree = true;
  std::string first_mismatch;
};

OracleComparison clifford_vs_dense_check(const Circuit& circuit, std::uint64_t seed,
                                         double tolerance = 1e-9);

/// Seeded random Clifford circuit over {H, P, CNOT} with optional
/// interleaved single-qubit Pauli measurements.
Circuit random_clifford_circuit(std::size_t n, std::size_t gates, std::size_t measurements,
                                std::mt19937_64& rng);

}  // namespace stabkit

#endif  // STABKIT_SIMULATE_HPP
