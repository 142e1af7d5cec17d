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

#ifndef STABKIT_GF4_HPP
#define STABKIT_GF4_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stabkit/pauli.hpp"

namespace stabkit {

/// An element of GF(4) = {0, 1, w, w2} with w^3 = 1 and w + w2 = 1.
///
/// Encoded as two bits (hi, lo) for hi*w + lo, so addition is XOR:
///   0 -> 00, 1 -> 01, w -> 10, w2 = 1 + w -> 11.
class GF4 {
 public:
  static const GF4 zero;
  static const GF4 one;
  static const GF4 omega;
  static const GF4 omega2;

  constexpr GF4() : v_(0) {}
  constexpr explicit GF4(std::uint8_t v) : v_(v & 3) {}

  constexpr std::uint8_t bits() const { return v_; }

  friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(a.v_ ^ b.v_); }

  friend constexpr GF4 operator*(GF4 a, GF4 b) {
    // (a1 + a2 w)(b1 + b2 w) with w^2 = 1 + w.
    const std::uint8_t a1 = a.v_ & 1, a2 = a.v_ >> 1;
    const std::uint8_t b1 = b.v_ & 1, b2 = b.v_ >> 1;
    const std::uint8_t c = a2 & b2;
    return GF4(static_cast<std::uint8_t>(((a1 & b1) ^ c) | ((((a1 & b2) ^ (a2 & b1)) ^ c) << 1)));
  }

  /// Conjugation swaps the two roots of x^2 + x + 1: fixes 0 and 1, swaps
  /// w and w2.
  constexpr GF4 conj() const {
    return GF4(static_cast<std::uint8_t>(((v_ & 1) ^ (v_ >> 1)) | (v_ & 2)));
  }

  /// Trace onto GF(2): tr 0 = tr 1 = 0, tr w = tr w2 = 1.
  constexpr bool trace() const { return (v_ >> 1) & 1; }

  constexpr bool operator==(GF4 o) const { return v_ == o.v_; }
  constexpr bool operator!=(GF4 o) const { return v_ != o.v_; }

  const char* name() const {
    static const char* names[4] = {"0", "1", "w", "w2"};
    return names[v_];
  }

 private:
  std::uint8_t v_;
};

inline constexpr GF4 GF4::zero{0};
inline constexpr GF4 GF4::one{1};
inline constexpr GF4 GF4::omega{2};
inline constexpr GF4 GF4::omega2{3};

/// A length-n vector over GF(4).
struct GF4Vector {
  std::vector<GF4> entries;

  std::size_t size() const { return entries.size(); }

  GF4Vector operator+(const GF4Vector& o) const;
  bool operator==(const GF4Vector& o) const;

  std::string to_string() const;
};

/// The I -> 0, Z -> 1, X -> w, Y -> w2 correspondence; drops the phase.
GF4Vector gf4_encode(const PauliOperator& p);

/// Inverse map; the returned Pauli has +1 phase.
PauliOperator gf4_decode(const GF4Vector& v);

/// Sum over positions of tr(u_i * conj(v_i)), in GF(2). Zero exactly when
/// the corresponding Pauli operators commute.
bool trace_inner(const GF4Vector& u, const GF4Vector& v);

}  // namespace stabkit

#endif  // STABKIT_GF4_HPP
