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

#ifndef STABKIT_TABLEAU_HPP
#define STABKIT_TABLEAU_HPP

#include <optional>
#include <random>

#include "stabkit/pauli.hpp"

namespace stabkit {

/// Stabilizer-tableau simulator with destabilizer rows for O(n^2)-amortized
/// Pauli measurements. Rows track exact phases in the i^p X^x Z^z form, so
/// row products and sign bookkeeping are integer-exact.
///
/// Single-owner mutable value; keep one per thread.
class Tableau {
 public:
  /// |0...0>: stabilizers Z_i, destabilizers X_i.
  explicit Tableau(std::size_t n);

  std::size_t num_qubits() const { return n_; }

  void apply_h(std::size_t q);
  void apply_p(std::size_t q);
  void apply_p_dagger(std::size_t q);
  void apply_cnot(std::size_t control, std::size_t target);
  /// Conjugation by a Pauli only flips row signs.
  void apply_pauli_gate(const PauliOperator& p);

  /// Measures a Hermitian Pauli. Deterministic outcomes leave the state
  /// unchanged; random ones are sampled from rng and the tableau updated so
  /// the signed operator joins the stabilizer. Returns +1 or -1.
  int measure_pauli(const PauliOperator& m, std::mt19937_64& rng);

  /// Measurement with a forced outcome for random branches. Returns the
  /// outcome actually realized (forced, or the deterministic value).
  int measure_pauli_forced(const PauliOperator& m, int desired);

  /// The sign with which the state satisfies m|psi> = s|psi>, or nullopt if
  /// the measurement would be random.
  std::optional<int> deterministic_outcome(const PauliOperator& m) const;

  /// Resets qubit q to |0> or |+> by measuring and correcting.
  void reset_qubit(std::size_t q, char basis, std::mt19937_64& rng);

  PauliOperator stabilizer_row(std::size_t i) const;
  PauliOperator destabilizer_row(std::size_t i) const;

  /// Structural invariants: rows Hermitian, stabilizers Abelian,
  /// destabilizer i anticommutes exactly with stabilizer i, and the 2n x 2n
  /// binary matrix is symplectic. Used by tests and debug checks.
  bool is_valid() const;

  /// True iff the state assigns the same stabilizer group (with signs) as
  /// the other tableau.
  bool same_state(const Tableau& other) const;

 private:
  struct Row {
    BitVector x;
    BitVector z;
    std::uint8_t phase = 0;  // exponent of i in i^p X^x Z^z
  };

  void debug_check() const;
  Row pauli_to_row(const PauliOperator& p) const;
  PauliOperator row_to_pauli(const Row& r) const;
  static void row_multiply(Row& lhs, const Row& rhs);
  bool row_anticommutes(const Row& r, const PauliOperator& m) const;

  std::size_t n_ = 0;
  std::vector<Row> stab_;
  std::vector<Row> destab_;
};

}  // namespace stabkit

#endif  // STABKIT_TABLEAU_HPP
