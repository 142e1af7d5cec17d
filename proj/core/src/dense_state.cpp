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

#include "stabkit/dense_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stabkit {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint64_t pauli_x_mask(const PauliOperator& p) {
  std::uint64_t m = 0;
  const std::size_t n = p.num_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) m |= std::uint64_t{1} << (n - 1 - q);
  }
  return m;
}

std::uint64_t pauli_z_mask(const PauliOperator& p) {
  std::uint64_t m = 0;
  const std::size_t n = p.num_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (p.z_bit(q)) m |= std::uint64_t{1} << (n - 1 - q);
  }
  return m;
}

}  // namespace

DenseState::DenseState(std::size_t n, std::size_t max_qubits) : n_(n) {
  if (n > max_qubits) {
    throw ResourceLimitError("dense simulation limited to " + std::to_string(max_qubits) +
                             " qubits");
  }
  amps_.assign(std::size_t{1} << n, Complex(0, 0));
  amps_[0] = Complex(1, 0);
}

DenseState DenseState::computational_basis(std::size_t n, std::uint64_t index,
                                           std::size_t max_qubits) {
  DenseState s(n, max_qubits);
  s.amps_[0] = Complex(0, 0);
  s.amps_[index] = Complex(1, 0);
  return s;
}

void DenseState::apply_h(std::size_t q) {
  const std::uint64_t mask = qubit_mask(q);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (b & mask) continue;
    const Complex a0 = amps_[b];
    const Complex a1 = amps_[b | mask];
    amps_[b] = (a0 + a1) * kInvSqrt2;
    amps_[b | mask] = (a0 - a1) * kInvSqrt2;
  }
}

void DenseState::apply_p(std::size_t q) {
  const std::uint64_t mask = qubit_mask(q);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (b & mask) amps_[b] *= Complex(0, 1);
  }
}

void DenseState::apply_p_dagger(std::size_t q) {
  const std::uint64_t mask = qubit_mask(q);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (b & mask) amps_[b] *= Complex(0, -1);
  }
}

void DenseState::apply_t(std::size_t q) { apply_rz(q, std::numbers::pi / 4); }

void DenseState::apply_t_dagger(std::size_t q) { apply_rz(q, -std::numbers::pi / 4); }

void DenseState::apply_rz(std::size_t q, double theta) {
  const std::uint64_t mask = qubit_mask(q);
  const Complex phase = std::polar(1.0, theta);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (b & mask) amps_[b] *= phase;
  }
}

void DenseState::apply_x(std::size_t q) {
  const std::uint64_t mask = qubit_mask(q);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (!(b & mask)) std::swap(amps_[b], amps_[b | mask]);
  }
}

void DenseState::apply_y(std::size_t q) {
  const std::uint64_t mask = qubit_mask(q);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (!(b & mask)) {
      const Complex a0 = amps_[b];
      const Complex a1 = amps_[b | mask];
      amps_[b] = Complex(0, -1) * a1;
      amps_[b | mask] = Complex(0, 1) * a0;
    }
  }
}

void DenseState::apply_z(std::size_t q) {
  const std::uint64_t mask = qubit_mask(q);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (b & mask) amps_[b] = -amps_[b];
  }
}

void DenseState::apply_cnot(std::size_t control, std::size_t target) {
  const std::uint64_t cmask = qubit_mask(control);
  const std::uint64_t tmask = qubit_mask(target);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if ((b & cmask) && !(b & tmask)) std::swap(amps_[b], amps_[b | tmask]);
  }
}

void DenseState::apply_single(std::size_t q, Complex m00, Complex m01, Complex m10, Complex m11) {
  const std::uint64_t mask = qubit_mask(q);
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    if (b & mask) continue;
    const Complex a0 = amps_[b];
    const Complex a1 = amps_[b | mask];
    amps_[b] = m00 * a0 + m01 * a1;
    amps_[b | mask] = m10 * a0 + m11 * a1;
  }
}

void DenseState::apply_pauli(const PauliOperator& p) {
  if (p.num_qubits() != n_) throw DimensionError("pauli length differs from state");
  const std::uint64_t xm = pauli_x_mask(p);
  const std::uint64_t zm = pauli_z_mask(p);
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex global = kPhases[p.xz_phase()];
  std::vector<Complex> out(amps_.size());
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    // i^p (-1)^{|z AND b|} |b XOR x>, applying Z first then X.
    const bool neg = std::popcount(b & zm) & 1;
    out[b ^ xm] = (neg ? -global : global) * amps_[b];
  }
  amps_ = std::move(out);
}

double DenseState::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void DenseState::normalize() {
  const double nrm = norm();
  if (nrm == 0) throw std::logic_error("cannot normalize the zero vector");
  for (auto& a : amps_) a /= nrm;
}

DenseState::Complex DenseState::inner_product(const DenseState& other) const {
  if (other.n_ != n_) throw DimensionError("states have different qubit counts");
  Complex s(0, 0);
  for (std::size_t b = 0; b < amps_.size(); ++b) s += std::conj(amps_[b]) * other.amps_[b];
  return s;
}

double DenseState::fidelity(const DenseState& other) const {
  return std::abs(inner_product(other));
}

DenseState::Complex DenseState::expectation(const PauliOperator& m) const {
  DenseState tmp = *this;
  tmp.apply_pauli(m);
  return inner_product(tmp);
}

double DenseState::probability_plus(const PauliOperator& m) const {
  // (1 + <m>)/2 for Hermitian m.
  return 0.5 * (1.0 + expectation(m).real());
}

int DenseState::measure_pauli(const PauliOperator& m, std::mt19937_64& rng) {
  if (!m.is_hermitian()) throw std::invalid_argument("cannot measure a non-Hermitian Pauli");
  const double p_plus = probability_plus(m);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const int outcome = dist(rng) < p_plus ? +1 : -1;
  project_pauli(m, outcome);
  normalize();
  return outcome;
}

double DenseState::postselect_pauli(const PauliOperator& m, int outcome) {
  if (!m.is_hermitian()) throw std::invalid_argument("cannot measure a non-Hermitian Pauli");
  const double left = project_pauli(m, outcome);
  if (left > 1e-18) normalize();
  return left;
}

double DenseState::project_pauli(const PauliOperator& g, int sign) {
  DenseState tmp = *this;
  tmp.apply_pauli(g);
  const double factor = sign >= 0 ? 0.5 : -0.5;
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    amps_[b] = 0.5 * amps_[b] + factor * tmp.amps_[b];
  }
  const double nrm = norm();
  return nrm * nrm;
}

int DenseState::measure_qubit_z(std::size_t q, std::mt19937_64& rng) {
  return measure_pauli(PauliOperator::single(n_, q, 'Z'), rng);
}

std::vector<DenseState> codeword_basis(const StabilizerCode& code, std::size_t max_qubits) {
  const std::size_t n = code.num_qubits();
  const std::size_t k = code.num_logical();
  if (code.num_logical() > 0 && code.logical_z().empty()) {
    throw std::logic_error("codeword_basis requires logical operators");
  }

  // Build the all-zero logical state by projecting a computational seed
  // onto the joint +1 eigenspace of the stabilizer and the logical Zs; the
  // other basis states are logical-X products of it, which pins down their
  // relative phases.
  DenseState zero(n, max_qubits);
  bool ok = false;
  for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << n); ++seed) {
    zero = DenseState::computational_basis(n, seed, max_qubits);
    double left = 1.0;
    for (const auto& g : code.generators()) {
      left = zero.project_pauli(g, +1);
      if (left < 1e-12) break;
    }
    if (left < 1e-12) continue;
    for (std::size_t i = 0; i < k; ++i) {
      left = zero.project_pauli(code.logical_z()[i], +1);
      if (left < 1e-12) break;
    }
    if (left < 1e-12) continue;
    zero.normalize();
    ok = true;
    break;
  }
  if (!ok) throw std::logic_error("code space projection produced the zero vector");

  std::vector<DenseState> basis;
  basis.reserve(std::size_t{1} << k);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    DenseState state = zero;
    for (std::size_t i = 0; i < k; ++i) {
      if ((bits >> i) & 1) state.apply_pauli(code.logical_x()[i]);
    }
    basis.push_back(std::move(state));
  }
  return basis;
}

DenseState logical_zero(const StabilizerCode& code, std::size_t max_qubits) {
  return codeword_basis(code, max_qubits).front();
}

}  // namespace stabkit
