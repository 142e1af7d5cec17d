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

#ifndef STABKIT_KNILL_LAFLAMME_HPP
#define STABKIT_KNILL_LAFLAMME_HPP

#include <Eigen/Dense>
#include <vector>

#include "stabkit/dense_state.hpp"
#include "stabkit/pauli.hpp"
#include "stabkit/stabilizer_code.hpp"

namespace stabkit {

/// Result of the error-correction condition check
/// <psi_i| Ea^dag Eb |psi_j> = C_ab delta_ij.
struct KLReport {
  /// C_ab, valid when is_code holds; Hermitian.
  Eigen::MatrixXcd c_matrix;
  bool is_code = false;
  /// Rank deficiency of C at the tolerance; meaningful when is_code.
  bool is_degenerate = false;
  /// Largest deviation from the C_ab delta_ij structure.
  double max_residual = 0.0;
  double tolerance = 1e-10;
};

/// Verifies the error-correction conditions for the given error set against
/// the dense codeword basis. All bundled computations are exact +-1/+-i
/// arithmetic, so residues above the default 1e-10 tolerance indicate bugs
/// rather than roundoff.
KLReport verify_knill_laflamme(const StabilizerCode& code,
                               const std::vector<PauliOperator>& errors, double tolerance = 1e-10,
                               std::size_t max_qubits = 16);

/// All 3n single-qubit errors, the standard distance-3 check set.
std::vector<PauliOperator> weight_one_errors(std::size_t n);

}  // namespace stabkit

#endif  // STABKIT_KNILL_LAFLAMME_HPP
