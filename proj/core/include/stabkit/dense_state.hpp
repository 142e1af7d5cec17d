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

#ifndef STABKIT_DENSE_STATE_HPP
#define STABKIT_DENSE_STATE_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "stabkit/pauli.hpp"
#include "stabkit/stabilizer_code.hpp"

namespace stabkit {

/// Full state-vector simulator, the verification oracle for everything the
/// tableau engine cannot see (exact phases, non-Clifford gates). Qubit 0 is
/// the leftmost tensor factor, i.e. the most significant bit of the
/// amplitude index.
///
/// Single-owner mutable value; run independent simulations on separate
/// instances.
class DenseState {
 public:
  using Complex = std::complex<double>;

  /// |0...0> on n qubits. Guarded by max_qubits (default 16, about 1 MB of
  /// amplitudes) since memory is 2^n.
  explicit DenseState(std::size_t n, std::size_t max_qubits = 16);

  static DenseState computational_basis(std::size_t n, std::uint64_t index,
                                        std::size_t max_qubits = 16);

  std::size_t num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }

  void apply_h(std::size_t q);
  void apply_p(std::size_t q);      // diag(1, i)
  void apply_p_dagger(std::size_t q);
  void apply_t(std::size_t q);      // diag(1, e^{i pi/4}), the pi/8 rotation
  void apply_t_dagger(std::size_t q);
  void apply_rz(std::size_t q, double theta);  // diag(1, e^{i theta})
  void apply_x(std::size_t q);
  void apply_y(std::size_t q);
  void apply_z(std::size_t q);
  void apply_cnot(std::size_t control, std::size_t target);

  void apply_single(std::size_t q, Complex m00, Complex m01, Complex m10, Complex m11);

  /// Applies a Pauli operator including its exact phase.
  void apply_pauli(const PauliOperator& p);

  double norm() const;
  void normalize();

  Complex inner_product(const DenseState& other) const;

  /// |<this|other>|: 1 means equal up to global phase.
  double fidelity(const DenseState& other) const;

  /// <psi| m |psi>.
  Complex expectation(const PauliOperator& m) const;

  /// Probability that measuring the Hermitian Pauli m yields +1.
  double probability_plus(const PauliOperator& m) const;

  /// Projective measurement of a Hermitian Pauli; samples by the Born rule,
  /// collapses, renormalizes, and returns +1 or -1.
  int measure_pauli(const PauliOperator& m, std::mt19937_64& rng);

  /// Forces the given branch; returns its pre-collapse probability.
  /// The state is collapsed and renormalized (unless the probability is
  /// zero, in which case the state is left untouched).
  double postselect_pauli(const PauliOperator& m, int outcome);

  /// Applies the projector (I + sign * g)/2 without renormalizing; returns
  /// the squared norm left.
  double project_pauli(const PauliOperator& g, int sign);

  /// Single-qubit Z-basis measurement.
  int measure_qubit_z(std::size_t q, std::mt19937_64& rng);

 private:
  std::uint64_t qubit_mask(std::size_t q) const { return std::uint64_t{1} << (n_ - 1 - q); }

  std::size_t n_ = 0;
  std::vector<Complex> amps_;
};

/// Orthonormal basis of the 2^k-dimensional code space, indexed by logical
/// bit string: entry b is the joint +1 eigenstate of the stabilizer and of
/// (-1)^{b_i} logical-Z_i. Requires logical operators on the code.
std::vector<DenseState> codeword_basis(const StabilizerCode& code, std::size_t max_qubits = 16);

/// Dense application check: |b> for the encoded computational state.
DenseState logical_zero(const StabilizerCode& code, std::size_t max_qubits = 16);

}  // namespace stabkit

#endif  // STABKIT_DENSE_STATE_HPP
