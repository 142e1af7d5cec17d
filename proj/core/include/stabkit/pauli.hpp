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

#ifndef STABKIT_PAULI_HPP
#define STABKIT_PAULI_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stabkit/bit_vector.hpp"

namespace stabkit {

/// Thrown when two operands disagree on qubit count.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An n-qubit Pauli operator in binary symplectic form.
///
/// Internally the operator is i^phase * X^x * Z^z, where X^x places an X on
/// every qubit with x-bit set and Z^z likewise, with the X factor to the left
/// of the Z factor on each qubit. A qubit with both bits set is a Y up to
/// phase (Y = iXZ), and the display phase returned by phase_i_exponent()
/// accounts for that conversion. Qubit 0 is the leftmost tensor factor.
///
/// Values are immutable in spirit: every operation returns a new operator, so
/// they are safe to share across threads.
class PauliOperator {
 public:
  PauliOperator() = default;

  /// The identity on n qubits.
  explicit PauliOperator(std::size_t n) : n_(n), x_(n), z_(n), phase_(0) {}

  PauliOperator(std::size_t n, BitVector x, BitVector z, std::uint8_t xz_phase = 0)
      : n_(n), x_(std::move(x)), z_(std::move(z)), phase_(xz_phase & 3) {
    if (x_.size() != n_ || z_.size() != n_) {
      throw DimensionError("pauli bit vectors must have length n");
    }
  }

  /// Parses "<sign><letters>" where sign is one of "", "+", "-", "+i", "-i"
  /// and letters are from {I,X,Y,Z}. Example: "-iXZZXI".
  static PauliOperator parse(std::string_view text);

  /// Single-qubit X/Y/Z embedded at `qubit` in an n-qubit identity.
  static PauliOperator single(std::size_t n, std::size_t qubit, char kind);

  /// The Hermitian operator with the given bits and +1 display sign (each
  /// x=z=1 position reads as Y).
  static PauliOperator from_xz(std::size_t n, BitVector x, BitVector z);

  std::size_t num_qubits() const { return n_; }
  const BitVector& x_bits() const { return x_; }
  const BitVector& z_bits() const { return z_; }

  bool x_bit(std::size_t q) const { return x_.get(q); }
  bool z_bit(std::size_t q) const { return z_.get(q); }

  /// Internal phase: the exponent of i in i^phase * X^x * Z^z.
  std::uint8_t xz_phase() const { return phase_; }

  /// Display phase: the exponent s in i^s * (tensor of I,X,Y,Z symbols).
  /// Each Y factor converts one i from the internal phase (Y = iXZ).
  std::uint8_t phase_i_exponent() const {
    const std::size_t ycount = x_.popcount() + z_.popcount() - x_.or_popcount(z_);
    return static_cast<std::uint8_t>((phase_ + 4 - (ycount & 3)) & 3);
  }

  /// True when the operator is +1 or -1 times a tensor of I,X,Y,Z
  /// (equivalently, when it squares to +1).
  bool is_hermitian() const { return (phase_i_exponent() & 1) == 0; }

  /// Sign bit for Hermitian operators: 0 for +, 1 for -. Callers in
  /// sign-only contexts (stabilizer rows) use this instead of the full
  /// phase. Throws if the phase is imaginary.
  bool sign_bit() const {
    const std::uint8_t s = phase_i_exponent();
    if (s & 1) throw std::logic_error("sign_bit() on a non-Hermitian Pauli");
    return s >> 1;
  }

  /// Letter on one qubit: 'I', 'X', 'Y' or 'Z'.
  char letter(std::size_t q) const {
    const bool x = x_.get(q), z = z_.get(q);
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }

  /// Number of tensor factors that are not I.
  std::size_t weight() const { return x_.or_popcount(z_); }

  bool is_identity() const { return !x_.any() && !z_.any(); }
  bool is_identity_up_to_phase() const { return is_identity(); }

  /// Exact group product, phase included.
  PauliOperator multiply(const PauliOperator& rhs) const {
    require_same_n(rhs);
    PauliOperator out(n_, x_ ^ rhs.x_, z_ ^ rhs.z_);
    // Reordering Z^z1 past X^x2 contributes (-1)^(z1.x2).
    const std::uint8_t reorder = z_.dot(rhs.x_) ? 2 : 0;
    out.phase_ = static_cast<std::uint8_t>((phase_ + rhs.phase_ + reorder) & 3);
    return out;
  }

  PauliOperator inverse() const {
    PauliOperator out(n_, x_, z_);
    const std::uint8_t reorder = x_.dot(z_) ? 2 : 0;
    out.phase_ = static_cast<std::uint8_t>((4 - phase_ + reorder) & 3);
    return out;
  }

  /// True iff the symplectic inner product x1.z2 + z1.x2 vanishes.
  bool commutes_with(const PauliOperator& rhs) const {
    require_same_n(rhs);
    return !(x_.dot(rhs.z_) ^ z_.dot(rhs.x_));
  }

  bool anticommutes_with(const PauliOperator& rhs) const { return !commutes_with(rhs); }

  /// Same tensor factors, any phase.
  bool equals_up_to_phase(const PauliOperator& rhs) const {
    return n_ == rhs.n_ && x_ == rhs.x_ && z_ == rhs.z_;
  }

  bool operator==(const PauliOperator& rhs) const {
    return equals_up_to_phase(rhs) && phase_ == rhs.phase_;
  }
  bool operator!=(const PauliOperator& rhs) const { return !(*this == rhs); }

  /// Multiply the internal phase by i^k.
  PauliOperator with_extra_phase(std::uint8_t k) const {
    PauliOperator out = *this;
    out.phase_ = static_cast<std::uint8_t>((out.phase_ + k) & 3);
    return out;
  }

  /// Restriction to phase-free comparison order: weight first, then
  /// lexicographic on the (x|z) bit string. Used for tie-breaking wherever a
  /// minimum-weight representative is chosen.
  bool lex_less_xz(const PauliOperator& rhs) const {
    if (x_ != rhs.x_) return x_.lex_less(rhs.x_);
    return z_.lex_less(rhs.z_);
  }

  /// Renders "<sign><letters>", always with an explicit sign prefix, e.g.
  /// "+XIZ" or "-iY". parse() round-trips this exactly.
  std::string to_string() const;

  void require_same_n(const PauliOperator& rhs) const {
    if (n_ != rhs.n_) throw DimensionError("pauli operands have different qubit counts");
  }

 private:
  std::size_t n_ = 0;
  BitVector x_;
  BitVector z_;
  std::uint8_t phase_ = 0;  // exponent of i in i^phase X^x Z^z
};

/// The (x|z) binary row used by the symplectic representation: x bits then z
/// bits, 2n entries total.
BitVector symplectic_row(const PauliOperator& p);

/// Inverse of symplectic_row; phase is set to +1 (display convention).
PauliOperator pauli_from_symplectic_row(const BitVector& row);

}  // namespace stabkit

#endif  // STABKIT_PAULI_HPP
