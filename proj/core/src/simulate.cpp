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

#include "stabkit/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace stabkit {

ShotResult run_tableau(const Circuit& circuit, Tableau& tableau, std::mt19937_64& rng) {
  if (!circuit.is_clifford_only()) {
    throw std::invalid_argument("tableau engine cannot run non-Clifford locations");
  }
  ShotResult result;
  for (const auto& loc : circuit.locations) {
    switch (loc.kind) {
      case Location::Kind::kPrep:
        tableau.reset_qubit(loc.q0, loc.prep_basis, rng);
        break;
      case Location::Kind::kH:
        tableau.apply_h(loc.q0);
        break;
      case Location::Kind::kP:
        tableau.apply_p(loc.q0);
        break;
      case Location::Kind::kPDag:
        tableau.apply_p_dagger(loc.q0);
        break;
      case Location::Kind::kX:
        tableau.apply_pauli_gate(PauliOperator::single(tableau.num_qubits(), loc.q0, 'X'));
        break;
      case Location::Kind::kY:
        tableau.apply_pauli_gate(PauliOperator::single(tableau.num_qubits(), loc.q0, 'Y'));
        break;
      case Location::Kind::kZ:
        tableau.apply_pauli_gate(PauliOperator::single(tableau.num_qubits(), loc.q0, 'Z'));
        break;
      case Location::Kind::kCnot:
        tableau.apply_cnot(loc.q0, loc.q1);
        break;
      case Location::Kind::kMeasure: {
        const bool fixed = tableau.deterministic_outcome(loc.measured).has_value();
        result.outcomes.push_back(tableau.measure_pauli(loc.measured, rng));
        result.deterministic.push_back(fixed);
        break;
      }
      case Location::Kind::kWait:
        break;
      case Location::Kind::kT:
      case Location::Kind::kTDag:
        throw std::invalid_argument("unreachable: non-Clifford location");
    }
  }
  return result;
}

ShotResult run_tableau(const Circuit& circuit, std::mt19937_64& rng) {
  Tableau tableau(circuit.n_qubits);
  return run_tableau(circuit, tableau, rng);
}

ShotResult run_dense(const Circuit& circuit, DenseState& state, std::mt19937_64& rng,
                     std::size_t max_qubits) {
  (void)max_qubits;
  ShotResult result;
  const std::size_t n = state.num_qubits();
  for (const auto& loc : circuit.locations) {
    switch (loc.kind) {
      case Location::Kind::kPrep: {
        // Measure-and-correct reset, matching the tableau semantics.
        const char basis = loc.prep_basis;
        const PauliOperator m = PauliOperator::single(n, loc.q0, basis == '0' ? 'Z' : 'X');
        if (state.measure_pauli(m, rng) < 0) {
          state.apply_pauli(PauliOperator::single(n, loc.q0, basis == '0' ? 'X' : 'Z'));
        }
        break;
      }
      case Location::Kind::kH:
        state.apply_h(loc.q0);
        break;
      case Location::Kind::kP:
        state.apply_p(loc.q0);
        break;
      case Location::Kind::kPDag:
        state.apply_p_dagger(loc.q0);
        break;
      case Location::Kind::kX:
        state.apply_x(loc.q0);
        break;
      case Location::Kind::kY:
        state.apply_y(loc.q0);
        break;
      case Location::Kind::kZ:
        state.apply_z(loc.q0);
        break;
      case Location::Kind::kT:
        state.apply_t(loc.q0);
        break;
      case Location::Kind::kTDag:
        state.apply_t_dagger(loc.q0);
        break;
      case Location::Kind::kCnot:
        state.apply_cnot(loc.q0, loc.q1);
        break;
      case Location::Kind::kMeasure:
        result.outcomes.push_back(state.measure_pauli(loc.measured, rng));
        result.deterministic.push_back(false);
        break;
      case Location::Kind::kWait:
        break;
    }
  }
  return result;
}

ShotResult run_dense(const Circuit& circuit, std::mt19937_64& rng, std::size_t max_qubits) {
  DenseState state(circuit.n_qubits, max_qubits);
  return run_dense(circuit, state, rng, max_qubits);
}

OracleComparison clifford_vs_dense_check(const Circuit& circuit, std::uint64_t seed,
                                         double tolerance) {
  OracleComparison cmp;
  cmp.circuits_checked = 1;
  std::mt19937_64 rng(seed);
  Tableau tableau(circuit.n_qubits);
  DenseState dense(circuit.n_qubits);

  auto fail = [&](const std::string& why) {
    if (cmp.agree) cmp.first_mismatch = why;
    cmp.agree = false;
  };

  const std::size_t n = circuit.n_qubits;
  for (const auto& loc : circuit.locations) {
    switch (loc.kind) {
      case Location::Kind::kPrep: {
        const char basis = loc.prep_basis;
        const PauliOperator m = PauliOperator::single(n, loc.q0, basis == '0' ? 'Z' : 'X');
        const int outcome = tableau.measure_pauli(m, rng);
        dense.postselect_pauli(m, outcome);
        if (outcome < 0) {
          const PauliOperator fixup = PauliOperator::single(n, loc.q0, basis == '0' ? 'X' : 'Z');
          tableau.apply_pauli_gate(fixup);
          dense.apply_pauli(fixup);
        }
        break;
      }
      case Location::Kind::kH:
        tableau.apply_h(loc.q0);
        dense.apply_h(loc.q0);
        break;
      case Location::Kind::kP:
        tableau.apply_p(loc.q0);
        dense.apply_p(loc.q0);
        break;
      case Location::Kind::kPDag:
        tableau.apply_p_dagger(loc.q0);
        dense.apply_p_dagger(loc.q0);
        break;
      case Location::Kind::kX:
      case Location::Kind::kY:
      case Location::Kind::kZ: {
        const char kind = loc.kind == Location::Kind::kX ? 'X'
                          : loc.kind == Location::Kind::kY ? 'Y'
                                                           : 'Z';
        const PauliOperator p = PauliOperator::single(n, loc.q0, kind);
        tableau.apply_pauli_gate(p);
        dense.apply_pauli(p);
        break;
      }
      case Location::Kind::kCnot:
        tableau.apply_cnot(loc.q0, loc.q1);
        dense.apply_cnot(loc.q0, loc.q1);
        break;
      case Location::Kind::kMeasure: {
        ++cmp.measurements_checked;
        const auto fixed = tableau.deterministic_outcome(loc.measured);
        const double p_plus = dense.probability_plus(loc.measured);
        if (fixed) {
          ++cmp.deterministic_checked;
          const double expected = *fixed > 0 ? 1.0 : 0.0;
          if (std::abs(p_plus - expected) > tolerance) {
            fail("deterministic outcome disagrees with dense probability at " + loc.to_string());
          }
          tableau.measure_pauli(loc.measured, rng);
          dense.postselect_pauli(loc.measured, *fixed);
        } else {
          if (std::abs(p_plus - 0.5) > tolerance) {
            fail("random outcome is not unbiased in the dense engine at " + loc.to_string());
          }
          const int outcome = tableau.measure_pauli(loc.measured, rng);
          dense.postselect_pauli(loc.measured, outcome);
        }
        break;
      }
      case Location::Kind::kWait:
        break;
      case Location::Kind::kT:
      case Location::Kind::kTDag:
        throw std::invalid_argument("oracle comparison needs a Clifford circuit");
    }
  }

  // Post-state agreement: every stabilizer row must hold exactly in the
  // dense state.
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = tableau.stabilizer_row(i);
    const auto expect = dense.expectation(row);
    if (std::abs(expect.real() - 1.0) > tolerance || std::abs(expect.imag()) > tolerance) {
      fail("post-state stabilizer " + row.to_string() + " not satisfied by the dense state");
      break;
    }
  }
  return cmp;
}

Circuit random_clifford_circuit(std::size_t n, std::size_t gates, std::size_t measurements,
                                std::mt19937_64& rng) {
  Circuit c;
  c.n_qubits = n;
  std::vector<std::size_t> meas_slots;
  for (std::size_t i = 0; i < measurements; ++i) meas_slots.push_back(rng() % (gates + 1));
  for (std::size_t g = 0; g <= gates; ++g) {
    for (auto slot : meas_slots) {
      if (slot == g) {
        const std::size_t q = rng() % n;
        const char kind = "XYZ"[rng() % 3];
        c.measure(PauliOperator::single(n, q, kind));
      }
    }
    if (g == gates) break;
    switch (rng() % 4) {
      case 0:
        c.h(rng() % n);
        break;
      case 1:
        c.p(rng() % n);
        break;
      case 2: {
        if (n < 2) {
          c.h(rng() % n);
          break;
        }
        const std::size_t a = rng() % n;
        std::size_t b = rng() % (n - 1);
        if (b >= a) ++b;
        c.cnot(a, b);
        break;
      }
      default: {
        const std::size_t q = rng() % n;
        const char kind = "XYZ"[rng() % 3];
        if (kind == 'X') c.x(q);
        if (kind == 'Y') c.y(q);
        if (kind == 'Z') c.z(q);
        break;
      }
    }
  }
  return c;
}

}  // namespace stabkit
