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

#include "stabkit/symplectic.hpp"

#include <stdexcept>

namespace stabkit {

GF2Matrix symplectic_of(const Circuit& circuit, std::size_t n) {
  GF2Matrix m = GF2Matrix::identity(2 * n);
  // Row r of m is the image of basis vector e_r; applying gate g maps every
  // row through g's action on (x|z) coordinates.
  auto for_rows = [&](auto&& update) {
    for (std::size_t r = 0; r < 2 * n; ++r) update(m.row(r));
  };
  for (const auto& loc : circuit.locations) {
    switch (loc.kind) {
      case Location::Kind::kH: {
        const std::size_t q = loc.q0;
        for_rows([&](BitVector& v) {
          const bool a = v.get(q), b = v.get(n + q);
          v.set(q, b);
          v.set(n + q, a);
        });
        break;
      }
      case Location::Kind::kP:
      case Location::Kind::kPDag: {
        const std::size_t q = loc.q0;
        for_rows([&](BitVector& v) {
          if (v.get(q)) v.flip(n + q);
        });
        break;
      }
      case Location::Kind::kCnot: {
        const std::size_t c = loc.q0, t = loc.q1;
        for_rows([&](BitVector& v) {
          if (v.get(c)) v.flip(t);
          if (v.get(n + t)) v.flip(n + c);
        });
        break;
      }
      case Location::Kind::kX:
      case Location::Kind::kY:
      case Location::Kind::kZ:
      case Location::Kind::kPrep:
      case Location::Kind::kMeasure:
      case Location::Kind::kWait:
        break;  // identity on the binary coordinates
      case Location::Kind::kT:
      case Location::Kind::kTDag:
        throw std::invalid_argument("non-Clifford location has no symplectic matrix");
    }
  }
  return m;
}

GF2Matrix symplectic_form(std::size_t n) {
  GF2Matrix omega(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    omega.set(i, n + i, true);
    omega.set(n + i, i, true);
  }
  return omega;
}

bool is_symplectic(const GF2Matrix& m) {
  if (m.num_rows() != m.num_cols() || m.num_rows() % 2 != 0) return false;
  const std::size_t n = m.num_rows() / 2;
  const GF2Matrix omega = symplectic_form(n);
  return m.multiply(omega).multiply(m.transpose()) == omega;
}

}  // namespace stabkit
