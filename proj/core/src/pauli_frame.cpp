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

#include "stabkit/pauli_frame.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabkit {

std::string FaultPattern::to_string() const {
  std::string s;
  for (const auto& f : faults) {
    if (!s.empty()) s += "; ";
    s += "@" + std::to_string(f.location) + " " + f.error.to_string();
  }
  return s.empty() ? "(no faults)" : s;
}

PauliOperator PauliFrame::restrict_to(const std::vector<std::size_t>& qubits) const {
  BitVector x(qubits.size()), z(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    x.set(i, x_.get(qubits[i]));
    z.set(i, z_.get(qubits[i]));
  }
  return PauliOperator::from_xz(qubits.size(), std::move(x), std::move(z));
}

BitVector FrameRun::flips_window(std::size_t first, std::size_t count) const {
  BitVector out(count);
  for (std::size_t i = 0; i < count; ++i) out.set(i, flips_.at(first + i));
  return out;
}

namespace {

void apply_location_to_frame(PauliFrame& frame, const Location& loc) {
  switch (loc.kind) {
    case Location::Kind::kPrep:
      frame.clear_qubit(loc.q0);
      break;
    case Location::Kind::kH:
      frame.apply_h(loc.q0);
      break;
    case Location::Kind::kP:
    case Location::Kind::kPDag:
      frame.apply_p(loc.q0);
      break;
    case Location::Kind::kX:
    case Location::Kind::kY:
    case Location::Kind::kZ:
    case Location::Kind::kWait:
      break;  // Pauli conjugation is trivial modulo phase
    case Location::Kind::kCnot:
      frame.apply_cnot(loc.q0, loc.q1);
      break;
    case Location::Kind::kMeasure:
      break;  // handled by the caller
    case Location::Kind::kT:
    case Location::Kind::kTDag:
      throw std::invalid_argument(
          "pauli-frame propagation requires a Clifford circuit (dense path needed)");
  }
}

}  // namespace

FrameResult propagate(const Circuit& circuit, const std::vector<ClassicalRule>& rules,
                      const FaultPattern& faults, const PauliFrame& input_frame,
                      const std::vector<bool>* reference_bits) {
  if (input_frame.num_qubits() != circuit.n_qubits) {
    throw DimensionError("input frame width differs from circuit");
  }
  FrameResult result;
  result.frame = input_frame;
  result.measurement_flips.reserve(circuit.num_measurements());

  // Builders append rules in location order; verify rather than copy-sort
  // (rule closures can be heavy).
  for (std::size_t r = 1; r < rules.size(); ++r) {
    if (rules[r].after_location < rules[r - 1].after_location) {
      throw std::logic_error("classical rules must be ordered by location");
    }
  }

  // Patterns are tiny; scan them inline per location.
  auto apply_faults_at = [&](std::size_t loc) {
    for (const auto& f : faults.faults) {
      if (f.location == loc) result.frame.multiply(f.error);
    }
  };

  std::size_t next_rule = 0;
  FrameRun run(result.frame, result.measurement_flips);
  run.set_reference_bits(reference_bits);
  for (std::size_t i = 0; i < circuit.locations.size(); ++i) {
    const Location& loc = circuit.locations[i];
    if (loc.kind == Location::Kind::kMeasure) {
      apply_faults_at(i);
      result.measurement_flips.push_back(result.frame.flips_measurement(loc.measured));
    } else {
      apply_location_to_frame(result.frame, loc);
      apply_faults_at(i);
    }
    while (next_rule < rules.size() && rules[next_rule].after_location == i) {
      rules[next_rule].fn(run);
      ++next_rule;
    }
  }
  while (next_rule < rules.size()) {
    rules[next_rule].fn(run);
    ++next_rule;
  }

  result.rejected = run.rejected();
  result.logical_flips = run.logical_flips();
  return result;
}

FrameResult propagate(const Circuit& circuit, const std::vector<ClassicalRule>& rules,
                      const FaultPattern& faults) {
  return propagate(circuit, rules, faults, PauliFrame(circuit.n_qubits));
}

std::vector<PauliOperator> fault_alphabet(const Circuit& circuit, std::size_t location) {
  const Location& loc = circuit.locations[location];
  const std::size_t n = circuit.n_qubits;
  const auto qubits = loc.qubits();
  std::vector<PauliOperator> out;
  // All nontrivial Paulis supported on the location's qubits.
  const std::size_t combos = std::size_t{1} << (2 * qubits.size());
  for (std::size_t mask = 1; mask < combos; ++mask) {
    BitVector x(n), z(n);
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      x.set(qubits[i], (mask >> (2 * i)) & 1);
      z.set(qubits[i], (mask >> (2 * i + 1)) & 1);
    }
    out.push_back(PauliOperator::from_xz(n, std::move(x), std::move(z)));
  }
  return out;
}

}  // namespace stabkit
