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

#include "stabkit/gf4.hpp"

namespace stabkit {

GF4Vector GF4Vector::operator+(const GF4Vector& o) const {
  if (size() != o.size()) throw DimensionError("GF4 vectors have different lengths");
  GF4Vector out;
  out.entries.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.entries.push_back(entries[i] + o.entries[i]);
  return out;
}

bool GF4Vector::operator==(const GF4Vector& o) const { return entries == o.entries; }

std::string GF4Vector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += entries[i].name();
  }
  return s + ")";
}

GF4Vector gf4_encode(const PauliOperator& p) {
  GF4Vector v;
  v.entries.reserve(p.num_qubits());
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    // hi bit = x (gives w for X), lo bit = z (gives 1 for Z); Y = w2.
    v.entries.push_back(GF4(static_cast<std::uint8_t>((p.x_bit(q) << 1) | p.z_bit(q))));
  }
  return v;
}

PauliOperator gf4_decode(const GF4Vector& v) {
  const std::size_t n = v.size();
  BitVector x(n), z(n);
  std::size_t ycount = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint8_t bits = v.entries[q].bits();
    const bool xb = (bits >> 1) & 1, zb = bits & 1;
    x.set(q, xb);
    z.set(q, zb);
    if (xb && zb) ++ycount;
  }
  return PauliOperator(n, std::move(x), std::move(z), static_cast<std::uint8_t>(ycount & 3));
}

bool trace_inner(const GF4Vector& u, const GF4Vector& v) {
  if (u.size() != v.size()) throw DimensionError("GF4 vectors have different lengths");
  bool acc = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc ^= (u.entries[i] * v.entries[i].conj()).trace();
  }
  return acc;
}

}  // namespace stabkit
