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

#ifndef STABKIT_CIRCUIT_HPP
#define STABKIT_CIRCUIT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stabkit/pauli.hpp"

namespace stabkit {

/// One timed instruction. Text format, one per line:
///
///   PREP q 0|+        prepare qubit q
///   H q | P q | PDG q  single-qubit Clifford
///   X q | Y q | Z q    Pauli gates
///   T q | TDG q        pi/8 rotations (dense engine only)
///   CNOT c t
///   MEAS <pauli>       joint Pauli measurement; weight-1 strings are the
///                      transversal single-qubit case
///   WAIT q
///
/// '#' starts a comment.
struct Location {
  enum class Kind : std::uint8_t {
    kPrep,
    kH,
    kP,
    kPDag,
    kX,
    kY,
    kZ,
    kT,
    kTDag,
    kCnot,
    kMeasure,
    kWait,
  };

  Kind kind = Kind::kWait;
  std::size_t q0 = 0;          // qubit (or CNOT control)
  std::size_t q1 = 0;          // CNOT target
  char prep_basis = '0';       // for kPrep: '0' or '+'
  PauliOperator measured;      // for kMeasure

  bool is_two_qubit() const { return kind == Kind::kCnot; }
  bool is_clifford() const { return kind != Kind::kT && kind != Kind::kTDag; }

  /// Qubits the location touches (fault support).
  std::vector<std::size_t> qubits() const;

  std::string to_string() const;
};

/// A time-ordered list of locations on n physical qubits, with an optional
/// map from qubit to (code block, position within block) for encoded
/// circuits. Immutable once built; share freely.
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<Location> locations;

  struct BlockPosition {
    std::size_t block = 0;
    std::size_t position = 0;
  };
  std::vector<BlockPosition> block_map;  // optional; indexed by qubit

  std::size_t num_measurements() const;
  bool is_clifford_only() const;

  Circuit& prep(std::size_t q, char basis = '0');
  Circuit& h(std::size_t q);
  Circuit& p(std::size_t q);
  Circuit& p_dagger(std::size_t q);
  Circuit& x(std::size_t q);
  Circuit& y(std::size_t q);
  Circuit& z(std::size_t q);
  Circuit& t(std::size_t q);
  Circuit& t_dagger(std::size_t q);
  Circuit& cnot(std::size_t c, std::size_t t);
  Circuit& measure(const PauliOperator& m);
  Circuit& measure_z(std::size_t q);
  Circuit& measure_x(std::size_t q);
  Circuit& wait(std::size_t q);

  /// Appends another circuit's locations (same qubit count).
  Circuit& append(const Circuit& other);

  std::string to_string() const;
};

Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_string(const std::string& text);

}  // namespace stabkit

#endif  // STABKIT_CIRCUIT_HPP
