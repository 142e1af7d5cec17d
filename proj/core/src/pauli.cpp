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

#include "stabkit/pauli.hpp"

namespace stabkit {

PauliOperator PauliOperator::parse(std::string_view text) {
  // Sign prefix uses lowercase 'i' so "+IXZ" (identity factor) and "+iXZ"
  // (imaginary phase) stay distinct.
  std::uint8_t display_phase = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    const bool minus = text[0] == '-';
    text.remove_prefix(1);
    bool imag = false;
    if (!text.empty() && text[0] == 'i') {
      imag = true;
      text.remove_prefix(1);
    }
    display_phase = static_cast<std::uint8_t>((minus ? 2 : 0) + (imag ? 1 : 0));
  }
  const std::size_t n = text.size();
  BitVector x(n), z(n);
  std::size_t ycount = 0;
  for (std::size_t q = 0; q < n; ++q) {
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        x.set(q, true);
        break;
      case 'Y':
        x.set(q, true);
        z.set(q, true);
        ++ycount;
        break;
      case 'Z':
        z.set(q, true);
        break;
      default:
        throw std::invalid_argument(std::string("invalid pauli character '") + text[q] + "'");
    }
  }
  return PauliOperator(n, std::move(x), std::move(z),
                       static_cast<std::uint8_t>((display_phase + ycount) & 3));
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char kind) {
  if (qubit >= n) throw std::out_of_range("qubit index out of range");
  BitVector x(n), z(n);
  std::uint8_t phase = 0;
  switch (kind) {
    case 'X':
      x.set(qubit, true);
      break;
    case 'Y':
      x.set(qubit, true);
      z.set(qubit, true);
      phase = 1;
      break;
    case 'Z':
      z.set(qubit, true);
      break;
    case 'I':
      break;
    default:
      throw std::invalid_argument("pauli kind must be one of I,X,Y,Z");
  }
  return PauliOperator(n, std::move(x), std::move(z), phase);
}

PauliOperator PauliOperator::from_xz(std::size_t n, BitVector x, BitVector z) {
  const std::size_t ycount = x.popcount() + z.popcount() - x.or_popcount(z);
  return PauliOperator(n, std::move(x), std::move(z), static_cast<std::uint8_t>(ycount & 3));
}

std::string PauliOperator::to_string() const {
  static const char* prefixes[4] = {"+", "+i", "-", "-i"};
  std::string s = prefixes[phase_i_exponent()];
  s.reserve(s.size() + n_);
  for (std::size_t q = 0; q < n_; ++q) s.push_back(letter(q));
  return s;
}

BitVector symplectic_row(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  BitVector row(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) row.set(q, true);
    if (p.z_bit(q)) row.set(n + q, true);
  }
  return row;
}

PauliOperator pauli_from_symplectic_row(const BitVector& row) {
  const std::size_t n = row.size() / 2;
  BitVector x(n), z(n);
  std::size_t ycount = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const bool xb = row.get(q), zb = row.get(n + q);
    if (xb) x.set(q, true);
    if (zb) z.set(q, true);
    if (xb && zb) ++ycount;
  }
  return PauliOperator(n, std::move(x), std::move(z), static_cast<std::uint8_t>(ycount & 3));
}

}  // namespace stabkit
