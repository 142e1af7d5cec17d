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

#ifndef STABKIT_REGISTRY_HPP
#define STABKIT_REGISTRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "stabkit/classical_code.hpp"
#include "stabkit/stabilizer_code.hpp"

namespace stabkit {

/// The [[5,1,3]] code, generators XZZXI and its cyclic shifts.
const StabilizerCode& five_qubit_code();

/// The [[7,1,3]] CSS code built from the Hamming [7,4,3] parity checks.
const StabilizerCode& steane_code();

/// The [[9,1,3]] code: ZZ parities within triples plus two X-sextets.
const StabilizerCode& shor_code();

/// Trivial [[n,n,1]] code with an empty stabilizer.
StabilizerCode trivial_code(std::size_t n);

/// Looks up a bundled code by name or alias ("five_qubit", "steane7",
/// "seven_qubit", "shor9", "nine_qubit", ...). Returns nullptr if unknown.
const StabilizerCode* find_code(const std::string& name);

std::vector<std::string> bundled_code_names();

/// Whether the bundled registry marks a code as supporting transversal
/// H and P-type logical gates (only the seven-qubit code in this release).
bool has_transversal_h_p(const StabilizerCode& code);

/// The Hamming [7,4,3] parity check matrix rows 1110100-style, as bundled.
const ClassicalLinearCode& hamming_7_4();

}  // namespace stabkit

#endif  // STABKIT_REGISTRY_HPP
