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

#ifndef STABKIT_GF2_MATRIX_HPP
#define STABKIT_GF2_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "stabkit/bit_vector.hpp"

namespace stabkit {

/// Dense matrix over GF(2), rows stored as packed BitVectors.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}
  explicit GF2Matrix(std::vector<BitVector> rows);

  static GF2Matrix identity(std::size_t n);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVector>& rows() const { return rows_; }

  void append_row(BitVector r);

  /// Row-vector times matrix: (v M) over GF(2). v has num_rows() entries.
  BitVector apply_left(const BitVector& v) const;

  /// Matrix times column-vector: (M v). v has num_cols() entries.
  BitVector apply_right(const BitVector& v) const;

  GF2Matrix multiply(const GF2Matrix& rhs) const;
  GF2Matrix transpose() const;

  std::size_t rank() const;

  /// Reduced row echelon form together with the pivot column per kept row.
  struct Echelon {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
  };
  Echelon reduced_echelon() const;

  /// True iff v lies in the row space.
  bool in_row_space(const BitVector& v) const;

  /// Basis of {x : M x = 0}.
  std::vector<BitVector> null_space() const;

  /// One solution of M x = b, if consistent.
  std::optional<BitVector> solve(const BitVector& b) const;

  /// The lexicographically least solution of M x = b (bit 0 most
  /// significant, preferring 0), or nullopt if inconsistent.
  std::optional<BitVector> solve_lex_min(const BitVector& b) const;

  bool operator==(const GF2Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

}  // namespace stabkit

#endif  // STABKIT_GF2_MATRIX_HPP
