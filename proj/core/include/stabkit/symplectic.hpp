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

#ifndef STABKIT_SYMPLECTIC_HPP
#define STABKIT_SYMPLECTIC_HPP

#include "stabkit/circuit.hpp"
#include "stabkit/gf2_matrix.hpp"

namespace stabkit {

/// The 2n x 2n binary matrix of a Clifford circuit acting on (x|z) row
/// vectors from the right: row(U P U^dag) = row(P) * M. Pauli gates and
/// measurements contribute the identity (they only move signs).
GF2Matrix symplectic_of(const Circuit& circuit, std::size_t n);

/// The symplectic form Omega for a1.b2 + b1.a2: blocks [[0, I], [I, 0]].
GF2Matrix symplectic_form(std::size_t n);

/// M Omega M^T == Omega over GF(2).
bool is_symplectic(const GF2Matrix& m);

}  // namespace stabkit

#endif  // STABKIT_SYMPLECTIC_HPP
