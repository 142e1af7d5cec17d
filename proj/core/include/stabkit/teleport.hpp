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

#ifndef STABKIT_TELEPORT_HPP
#define STABKIT_TELEPORT_HPP

#include <string>
#include <vector>

#include "stabkit/circuit.hpp"
#include "stabkit/stabilizer_code.hpp"

namespace stabkit {

/// One verified branch of the pi/8 gate teleportation.
struct Pi8BranchResult {
  std::string input;       // "0", "1", "+"
  int branch = 0;          // logical measurement outcome 0/1
  double fidelity = 0.0;   // against the ideal logical pi/8 output
  bool decode_consistent = false;  // classical word decode matched the branch
};

struct Pi8TeleportReport {
  bool passed = false;
  double min_fidelity = 0.0;
  std::vector<Pi8BranchResult> branches;
};

/// Dense verification of the one-ancilla pi/8 gate teleportation: with the
/// data block in an encoded input and the ancilla block in
/// |0bar> + e^{i pi/4}|1bar>, a transversal CNOT from the ancilla onto the
/// data followed by a destructive logical Z measurement of the data leaves
/// the ancilla in R_{pi/8}-bar applied to the input, with correction
/// X-bar P-bar-dagger on the odd branch. Both branches are forced and
/// checked for each input in {|0bar>, |1bar>, |+bar>}.
Pi8TeleportReport check_pi8_teleportation(const StabilizerCode& code, double tolerance = 1e-9);

/// The Clifford skeleton of the gadget (ancilla assumed supplied): the
/// transversal CNOT plus the data-block readout, on 2n qubits with the data
/// block first.
Circuit pi8_teleport_circuit(const StabilizerCode& code);

}  // namespace stabkit

#endif  // STABKIT_TELEPORT_HPP
