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

#ifndef STABKIT_CODE_IO_HPP
#define STABKIT_CODE_IO_HPP

#include <iosfwd>
#include <string>

#include "stabkit/gf2_matrix.hpp"
#include "stabkit/stabilizer_code.hpp"

namespace stabkit {

/// Stabilizer code text format:
///
///   n=<int> k=<int>
///   <pauli string per generator, n - k lines>
///   LX:            (optional)
///   <k pauli strings>
///   LZ:            (optional)
///   <k pauli strings>
///
/// '#' starts a comment; blank lines are skipped. parse_code/format_code
/// round-trip exactly.
StabilizerCode parse_code(std::istream& in, const std::string& name = "file");
StabilizerCode parse_code_string(const std::string& text, const std::string& name = "file");
std::string format_code(const StabilizerCode& code);

/// Binary matrix text format: one row of 0/1 characters per line (spaces
/// allowed), '#' comments.
GF2Matrix parse_matrix(std::istream& in);
GF2Matrix parse_matrix_string(const std::string& text);
std::string format_matrix(const GF2Matrix& m);

}  // namespace stabkit

#endif  // STABKIT_CODE_IO_HPP
