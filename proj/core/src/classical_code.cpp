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

#include "stabkit/classical_code.hpp"

#include <stdexcept>

#include "stabkit/stabilizer_code.hpp"

namespace stabkit {

ClassicalLinearCode::ClassicalLinearCode(GF2Matrix parity_check, std::string name)
    : name_(std::move(name)), h_(std::move(parity_check)) {}

GF2Matrix ClassicalLinearCode::generator_matrix() const {
  auto basis = h_.null_space();
  if (basis.empty()) return GF2Matrix(0, length());
  return GF2Matrix(std::move(basis));
}

std::size_t ClassicalLinearCode::minimum_distance() const {
  const GF2Matrix gen = generator_matrix();
  const std::size_t k = gen.num_rows();
  if (k == 0) return 0;
  if (k > 24) throw ResourceLimitError("codeword enumeration limited to 2^24");
  std::size_t best = length() + 1;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    BitVector word(length());
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) word ^= gen.row(i);
    }
    best = std::min(best, word.popcount());
  }
  return best;
}

bool ClassicalLinearCode::is_codeword(const BitVector& v) const { return !syndrome(v).any(); }

void ClassicalLinearCode::build_table() const {
  const std::size_t m = h_.rank();
  if (m > 24) throw ResourceLimitError("syndrome table limited to 2^24");
  // Syndromes index by the raw H*v bits (H may have dependent rows; those
  // bits are determined, so the table is sized by num_rows but only
  // reachable entries are filled).
  const std::size_t bits = h_.num_rows();
  if (bits > 24) throw ResourceLimitError("syndrome table limited to 2^24");
  const std::size_t size = std::size_t{1} << bits;
  table_.assign(size, BitVector(0));
  std::vector<bool> filled(size, false);
  std::size_t remaining = std::size_t{1} << m;

  const std::size_t n = length();
  std::vector<std::size_t> support;
  for (std::size_t w = 0; w <= n && remaining > 0; ++w) {
    // Enumerate weight-w words in lexicographic support order.
    support.resize(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    while (true) {
      BitVector word(n);
      for (auto p : support) word.set(p, true);
      std::size_t idx = 0;
      const BitVector s = syndrome(word);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.get(i)) idx |= std::size_t{1} << i;
      }
      if (!filled[idx]) {
        table_[idx] = word;
        filled[idx] = true;
        --remaining;
      } else if (table_[idx].popcount() == w && word.lex_less(table_[idx])) {
        table_[idx] = word;
      }
      if (w == 0) break;
      std::size_t i = w;
      bool done = false;
      while (i > 0) {
        --i;
        if (support[i] != i + n - w) break;
        if (i == 0) done = true;
      }
      if (done) break;
      ++support[i];
      for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
    }
  }
}

const BitVector& ClassicalLinearCode::decode_syndrome(const BitVector& syndrome) const {
  if (table_.empty()) build_table();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < syndrome.size(); ++i) {
    if (syndrome.get(i)) idx |= std::size_t{1} << i;
  }
  return table_[idx];
}

bool dual_contained_in(const ClassicalLinearCode& c2, const ClassicalLinearCode& c1,
                       BitVector* witness) {
  // The dual of c2 is the row space of its parity check matrix; containment
  // in c1 means every such row is annihilated by c1's checks.
  for (std::size_t r = 0; r < c2.parity_check().num_rows(); ++r) {
    const BitVector& dual_word = c2.parity_check().row(r);
    if (!c1.is_codeword(dual_word)) {
      if (witness) *witness = dual_word;
      return false;
    }
  }
  return true;
}

}  // namespace stabkit
