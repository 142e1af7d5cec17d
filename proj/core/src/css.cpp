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

#include "stabkit/css.hpp"

namespace stabkit {

namespace {

PauliOperator pauli_from_support(std::size_t n, const BitVector& support, char kind) {
  BitVector x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (support.get(q)) {
      if (kind == 'X') {
        x.set(q, true);
      } else {
        z.set(q, true);
      }
    }
  }
  return PauliOperator(n, std::move(x), std::move(z));
}

}  // namespace

CssCode css_construct(const ClassicalLinearCode& c1, const ClassicalLinearCode& c2,
                      std::string name) {
  if (c1.length() != c2.length()) {
    throw CssConstructionError("classical codes have different lengths");
  }
  BitVector witness;
  if (!dual_contained_in(c2, c1, &witness)) {
    throw CssConstructionError("dual(C2) not contained in C1; offending dual codeword " +
                               witness.to_string());
  }
  const std::size_t n = c1.length();

  // Independent checks only, so generator counts match n-k exactly.
  const auto z_rows = GF2Matrix(c1.parity_check()).reduced_echelon().rows;
  const auto x_rows = GF2Matrix(c2.parity_check()).reduced_echelon().rows;

  std::vector<PauliOperator> gens;
  gens.reserve(z_rows.size() + x_rows.size());
  for (const auto& row : z_rows) gens.push_back(pauli_from_support(n, row, 'Z'));
  for (const auto& row : x_rows) gens.push_back(pauli_from_support(n, row, 'X'));

  CssCode out;
  out.num_z_generators = z_rows.size();
  out.num_x_generators = x_rows.size();
  out.code = with_logicals(StabilizerCode(std::move(name), n, std::move(gens)));

  const std::size_t d1 = c1.minimum_distance();
  const std::size_t d2 = c2.minimum_distance();
  out.distance_lower_bound = std::min(d1, d2);
  return out;
}

bool is_css(const StabilizerCode& code) {
  for (const auto& g : code.generators()) {
    if (g.x_bits().any() && g.z_bits().any()) return false;
  }
  return true;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> css_generator_split(
    const StabilizerCode& code) {
  std::vector<std::size_t> x_rows, z_rows;
  for (std::size_t i = 0; i < code.num_generators(); ++i) {
    const auto& g = code.generator(i);
    if (g.x_bits().any()) {
      x_rows.push_back(i);
    } else if (g.z_bits().any()) {
      z_rows.push_back(i);
    }
  }
  return {x_rows, z_rows};
}

ClassicalLinearCode css_bit_code(const StabilizerCode& code) {
  auto [x_rows, z_rows] = css_generator_split(code);
  GF2Matrix h(0, code.num_qubits());
  for (auto i : z_rows) h.append_row(code.generator(i).z_bits());
  return ClassicalLinearCode(std::move(h), code.name() + "-C1");
}

ClassicalLinearCode css_phase_code(const StabilizerCode& code) {
  auto [x_rows, z_rows] = css_generator_split(code);
  GF2Matrix h(0, code.num_qubits());
  for (auto i : x_rows) h.append_row(code.generator(i).x_bits());
  return ClassicalLinearCode(std::move(h), code.name() + "-C2");
}

}  // namespace stabkit
