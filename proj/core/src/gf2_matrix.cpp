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

#include "stabkit/gf2_matrix.hpp"

#include <stdexcept>

namespace stabkit {

GF2Matrix::GF2Matrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_[0].size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw std::invalid_argument("ragged GF2Matrix rows");
  }
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void GF2Matrix::append_row(BitVector r) {
  if (rows_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row width mismatch");
  rows_.push_back(std::move(r));
}

BitVector GF2Matrix::apply_left(const BitVector& v) const {
  if (v.size() != num_rows()) throw std::invalid_argument("apply_left size mismatch");
  BitVector out(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (v.get(r)) out ^= rows_[r];
  }
  return out;
}

BitVector GF2Matrix::apply_right(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply_right size mismatch");
  BitVector out(num_rows());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].dot(v));
  return out;
}

GF2Matrix GF2Matrix::multiply(const GF2Matrix& rhs) const {
  if (cols_ != rhs.num_rows()) throw std::invalid_argument("multiply shape mismatch");
  GF2Matrix out(num_rows(), rhs.num_cols());
  for (std::size_t r = 0; r < num_rows(); ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[r].get(k)) out.row(r) ^= rhs.row(k);
    }
  }
  return out;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix out(cols_, num_rows());
  for (std::size_t r = 0; r < num_rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[r].get(c)) out.set(c, r, true);
    }
  }
  return out;
}

GF2Matrix::Echelon GF2Matrix::reduced_echelon() const {
  Echelon e;
  e.rows = rows_;
  std::size_t next = 0;
  std::vector<BitVector> kept;
  for (std::size_t col = 0; col < cols_ && next < e.rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < e.rows.size() && !e.rows[pivot].get(col)) ++pivot;
    if (pivot == e.rows.size()) continue;
    std::swap(e.rows[next], e.rows[pivot]);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (r != next && e.rows[r].get(col)) e.rows[r] ^= e.rows[next];
    }
    e.pivots.push_back(col);
    ++next;
  }
  e.rows.resize(e.pivots.size());
  return e;
}

std::size_t GF2Matrix::rank() const { return reduced_echelon().pivots.size(); }

bool GF2Matrix::in_row_space(const BitVector& v) const {
  const Echelon e = reduced_echelon();
  BitVector rem = v;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (rem.get(e.pivots[i])) rem ^= e.rows[i];
  }
  return !rem.any();
}

std::vector<BitVector> GF2Matrix::null_space() const {
  const Echelon e = reduced_echelon();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(cols_);
    v.set(free, true);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.rows[i].get(free)) v.set(e.pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Echelonizes the augmented system [M | b]; returns pivots and rows, or
// nullopt when inconsistent.
struct Augmented {
  std::vector<BitVector> rows;  // width cols, M part only
  std::vector<bool> rhs;
  std::vector<std::size_t> pivots;
};

std::optional<Augmented> eliminate(const std::vector<BitVector>& mrows, std::size_t cols,
                                   const BitVector& b) {
  Augmented a;
  a.rows = mrows;
  a.rhs.resize(mrows.size());
  for (std::size_t i = 0; i < mrows.size(); ++i) a.rhs[i] = b.get(i);
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < a.rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < a.rows.size() && !a.rows[pivot].get(col)) ++pivot;
    if (pivot == a.rows.size()) continue;
    std::swap(a.rows[next], a.rows[pivot]);
    std::swap(a.rhs[next], a.rhs[pivot]);
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
      if (r != next && a.rows[r].get(col)) {
        a.rows[r] ^= a.rows[next];
        a.rhs[r] = a.rhs[r] ^ a.rhs[next];
      }
    }
    a.pivots.push_back(col);
    ++next;
  }
  for (std::size_t r = a.pivots.size(); r < a.rows.size(); ++r) {
    if (a.rhs[r]) return std::nullopt;  // 0 = 1
  }
  a.rows.resize(a.pivots.size());
  a.rhs.resize(a.pivots.size());
  return a;
}

}  // namespace

std::optional<BitVector> GF2Matrix::solve(const BitVector& b) const {
  if (b.size() != num_rows()) throw std::invalid_argument("solve rhs size mismatch");
  auto a = eliminate(rows_, cols_, b);
  if (!a) return std::nullopt;
  BitVector x(cols_);
  for (std::size_t i = 0; i < a->pivots.size(); ++i) x.set(a->pivots[i], a->rhs[i]);
  return x;
}

std::optional<BitVector> GF2Matrix::solve_lex_min(const BitVector& b) const {
  auto a = eliminate(rows_, cols_, b);
  if (!a) return std::nullopt;
  BitVector x(cols_);
  for (std::size_t i = 0; i < a->pivots.size(); ++i) x.set(a->pivots[i], a->rhs[i]);

  // The solution space is x + span(null basis). Bring the basis to RREF so
  // leading bits are unique, then clear x at every leading position. Any
  // other solution differs from the result by a nonempty sum of RREF rows,
  // whose first set bit falls on a position the result holds 0 at, so the
  // result is lexicographically least.
  GF2Matrix basis(null_space());
  if (basis.num_rows() > 0) {
    const Echelon be = basis.reduced_echelon();
    for (std::size_t i = 0; i < be.pivots.size(); ++i) {
      if (x.get(be.pivots[i])) x ^= be.rows[i];
    }
  }
  return x;
}

std::string GF2Matrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

}  // namespace stabkit
