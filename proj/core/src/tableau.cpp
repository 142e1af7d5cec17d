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

#include "stabkit/tableau.hpp"

#include <cassert>
#include <stdexcept>

namespace stabkit {

Tableau::Tableau(std::size_t n) : n_(n) {
  stab_.reserve(n);
  destab_.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    Row s{BitVector(n), BitVector(n), 0};
    s.z.set(q, true);
    stab_.push_back(std::move(s));
    Row d{BitVector(n), BitVector(n), 0};
    d.x.set(q, true);
    destab_.push_back(std::move(d));
  }
}

Tableau::Row Tableau::pauli_to_row(const PauliOperator& p) const {
  return Row{p.x_bits(), p.z_bits(), p.xz_phase()};
}

PauliOperator Tableau::row_to_pauli(const Row& r) const {
  return PauliOperator(n_, r.x, r.z, r.phase);
}

void Tableau::row_multiply(Row& lhs, const Row& rhs) {
  // i^p1 X^x1 Z^z1 * i^p2 X^x2 Z^z2: moving Z^z1 past X^x2 costs
  // (-1)^(z1.x2).
  const std::uint8_t reorder = lhs.z.dot(rhs.x) ? 2 : 0;
  lhs.phase = static_cast<std::uint8_t>((lhs.phase + rhs.phase + reorder) & 3);
  lhs.x ^= rhs.x;
  lhs.z ^= rhs.z;
}

bool Tableau::row_anticommutes(const Row& r, const PauliOperator& m) const {
  return r.x.dot(m.z_bits()) ^ r.z.dot(m.x_bits());
}

void Tableau::apply_h(std::size_t q) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  auto update = [q](Row& r) {
    const bool a = r.x.get(q), b = r.z.get(q);
    r.x.set(q, b);
    r.z.set(q, a);
    if (a && b) r.phase = static_cast<std::uint8_t>((r.phase + 2) & 3);
  };
  for (auto& r : stab_) update(r);
  for (auto& r : destab_) update(r);
  debug_check();
}

void Tableau::apply_p(std::size_t q) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  auto update = [q](Row& r) {
    if (r.x.get(q)) {
      r.phase = static_cast<std::uint8_t>((r.phase + 1) & 3);
      r.z.flip(q);
    }
  };
  for (auto& r : stab_) update(r);
  for (auto& r : destab_) update(r);
  debug_check();
}

void Tableau::apply_p_dagger(std::size_t q) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  auto update = [q](Row& r) {
    if (r.x.get(q)) {
      r.phase = static_cast<std::uint8_t>((r.phase + 3) & 3);
      r.z.flip(q);
    }
  };
  for (auto& r : stab_) update(r);
  for (auto& r : destab_) update(r);
  debug_check();
}

void Tableau::apply_cnot(std::size_t control, std::size_t target) {
  if (control >= n_ || target >= n_) throw std::out_of_range("qubit index out of range");
  if (control == target) throw std::invalid_argument("CNOT control equals target");
  auto update = [control, target](Row& r) {
    if (r.x.get(control)) r.x.flip(target);
    if (r.z.get(target)) r.z.flip(control);
  };
  for (auto& r : stab_) update(r);
  for (auto& r : destab_) update(r);
  debug_check();
}

void Tableau::apply_pauli_gate(const PauliOperator& p) {
  if (p.num_qubits() != n_) throw DimensionError("pauli length differs from tableau");
  auto update = [&](Row& r) {
    if (row_anticommutes(r, p)) r.phase = static_cast<std::uint8_t>((r.phase + 2) & 3);
  };
  for (auto& r : stab_) update(r);
  for (auto& r : destab_) update(r);
  debug_check();
}

std::optional<int> Tableau::deterministic_outcome(const PauliOperator& m) const {
  if (m.num_qubits() != n_) throw DimensionError("pauli length differs from tableau");
  if (!m.is_hermitian()) throw std::invalid_argument("cannot measure a non-Hermitian Pauli");
  for (const auto& r : stab_) {
    if (row_anticommutes(r, m)) return std::nullopt;
  }
  // m commutes with the whole stabilizer, so m = +-(product of the
  // stabilizer rows whose destabilizer partners anticommute with m).
  Row acc{BitVector(n_), BitVector(n_), 0};
  for (std::size_t i = 0; i < n_; ++i) {
    if (row_anticommutes(destab_[i], m)) row_multiply(acc, stab_[i]);
  }
  const PauliOperator g = row_to_pauli(acc);
  const PauliOperator delta = m.multiply(g.inverse());
  if (!delta.is_identity()) throw std::logic_error("tableau rows do not span the group");
  return delta.sign_bit() ? -1 : +1;
}

int Tableau::measure_pauli(const PauliOperator& m, std::mt19937_64& rng) {
  const auto fixed = deterministic_outcome(m);
  if (fixed) return *fixed;
  return measure_pauli_forced(m, (rng() & 1) ? +1 : -1);
}

int Tableau::measure_pauli_forced(const PauliOperator& m, int desired) {
  const auto fixed = deterministic_outcome(m);
  if (fixed) return *fixed;

  std::size_t pivot = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (row_anticommutes(stab_[i], m)) {
      pivot = i;
      break;
    }
  }
  const Row old_pivot = stab_[pivot];
  for (std::size_t i = 0; i < n_; ++i) {
    if (i != pivot && row_anticommutes(stab_[i], m)) row_multiply(stab_[i], old_pivot);
    if (row_anticommutes(destab_[i], m)) {
      if (i == pivot) continue;  // replaced below
      row_multiply(destab_[i], old_pivot);
    }
  }
  destab_[pivot] = old_pivot;
  stab_[pivot] = pauli_to_row(desired < 0 ? m.with_extra_phase(2) : m);
  debug_check();
  return desired < 0 ? -1 : +1;
}

void Tableau::reset_qubit(std::size_t q, char basis, std::mt19937_64& rng) {
  if (basis == '0') {
    if (measure_pauli(PauliOperator::single(n_, q, 'Z'), rng) < 0) {
      apply_pauli_gate(PauliOperator::single(n_, q, 'X'));
    }
  } else if (basis == '+') {
    if (measure_pauli(PauliOperator::single(n_, q, 'X'), rng) < 0) {
      apply_pauli_gate(PauliOperator::single(n_, q, 'Z'));
    }
  } else {
    throw std::invalid_argument("reset basis must be '0' or '+'");
  }
}

void Tableau::debug_check() const {
#ifndef NDEBUG
  // Step-wise structural check, kept to small tableaus so debug test runs
  // stay fast; release builds validate per circuit in the test suite.
  if (n_ <= 12) assert(is_valid());
#endif
}

PauliOperator Tableau::stabilizer_row(std::size_t i) const { return row_to_pauli(stab_[i]); }
PauliOperator Tableau::destabilizer_row(std::size_t i) const { return row_to_pauli(destab_[i]); }

bool Tableau::is_valid() const {
  for (std::size_t i = 0; i < n_; ++i) {
    const PauliOperator si = stabilizer_row(i);
    const PauliOperator di = destabilizer_row(i);
    if (!si.is_hermitian() || !di.is_hermitian()) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      const PauliOperator sj = stabilizer_row(j);
      const PauliOperator dj = destabilizer_row(j);
      if (!si.commutes_with(sj)) return false;
      if (!di.commutes_with(dj)) return false;
      const bool want_anticommute = (i == j);
      if (di.commutes_with(sj) == want_anticommute) return false;
    }
  }
  return true;
}

bool Tableau::same_state(const Tableau& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto outcome = other.deterministic_outcome(stabilizer_row(i));
    if (!outcome || *outcome != +1) return false;
  }
  return true;
}

}  // namespace stabkit
