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

#ifndef STABKIT_CSS_HPP
#define STABKIT_CSS_HPP

#include <string>

#include "stabkit/classical_code.hpp"
#include "stabkit/stabilizer_code.hpp"

namespace stabkit {

class CssConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CssCode {
  StabilizerCode code;
  // min(d1, d2) is only a lower bound on the true distance; degeneracy can
  // push the enumerated distance higher.
  std::size_t distance_lower_bound = 0;
  std::size_t num_z_generators = 0;
  std::size_t num_x_generators = 0;
};

/// CSS construction: Z generators from c1's parity checks, X generators
/// from c2's. Requires dual(c2) contained in c1; throws
/// CssConstructionError naming an offending dual codeword otherwise.
CssCode css_construct(const ClassicalLinearCode& c1, const ClassicalLinearCode& c2,
                      std::string name = "css");

/// True when every generator is purely X-type or purely Z-type.
bool is_css(const StabilizerCode& code);

/// Splits a CSS code's generator indices into (x_rows, z_rows).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> css_generator_split(
    const StabilizerCode& code);

/// The classical code whose checks are the Z-type generator supports
/// (bit-flip decoding code, C1 in the construction).
ClassicalLinearCode css_bit_code(const StabilizerCode& code);

/// The classical code whose checks are the X-type generator supports
/// (phase-flip decoding code, C2 in the construction).
ClassicalLinearCode css_phase_code(const StabilizerCode& code);

}  // namespace stabkit

#endif  // STABKIT_CSS_HPP
