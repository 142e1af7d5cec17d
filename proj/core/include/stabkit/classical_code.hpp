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

#ifndef STABKIT_CLASSICAL_CODE_HPP
#define STABKIT_CLASSICAL_CODE_HPP

#include <string>
#include <vector>

#include "stabkit/gf2_matrix.hpp"

namespace stabkit {

/// A classical binary linear [n,k,d] code given by its parity check matrix.
class ClassicalLinearCode {
 public:
  ClassicalLinearCode() = default;
  explicit ClassicalLinearCode(GF2Matrix parity_check, std::string name = "");

  const std::string& name() const { return name_; }
  const GF2Matrix& parity_check() const { return h_; }
  std::size_t length() const { return h_.num_cols(); }
  std::size_t dimension() const { return length() - h_.rank(); }

  /// Generator matrix: a basis of the codeword space (null space of H).
  GF2Matrix generator_matrix() const;

  /// Minimum nonzero codeword weight by enumerating the 2^k codewords.
  /// Returns 0 for the zero code. Guarded at k <= 24.
  std::size_t minimum_distance() const;

  bool is_codeword(const BitVector& v) const;

  BitVector syndrome(const BitVector& v) const { return h_.apply_right(v); }

  /// Minimum-weight error with the given syndrome (coset leader, ties
  /// lexicographic): the decode step used by syndrome error correction.
  /// The table is built lazily on first use; requires n-k <= 24.
  const BitVector& decode_syndrome(const BitVector& syndrome) const;

  /// Coset leader for a received word: decode_syndrome(H * word).
  BitVector decode_word(const BitVector& word) const { return decode_syndrome(syndrome(word)); }

 private:
  void build_table() const;

  std::string name_;
  GF2Matrix h_;
  mutable std::vector<BitVector> table_;  // syndrome index -> leader
};

/// True iff the dual of c2 is contained in c1, the CSS construction's
/// precondition. If violated and witness is non-null, stores an offending
/// dual codeword of c2.
bool dual_contained_in(const ClassicalLinearCode& c2, const ClassicalLinearCode& c1,
                       BitVector* witness = nullptr);

}  // namespace stabkit

#endif  // STABKIT_CLASSICAL_CODE_HPP
