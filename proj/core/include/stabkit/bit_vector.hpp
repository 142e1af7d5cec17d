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

#ifndef STABKIT_BIT_VECTOR_HPP
#define STABKIT_BIT_VECTOR_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stabkit {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bit i of the vector lives in word i/64 at position i%64. Comparison is
/// lexicographic with bit 0 most significant (bit 0 = leftmost position),
/// so "smaller" means 0s earlier.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  void operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  }

  void operator&=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }

  void operator|=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }

  /// Parity of the AND with another vector, i.e. the GF(2) dot product.
  bool dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
  }

  /// Popcount of the OR with another vector (joint support size).
  std::size_t or_popcount(const BitVector& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] | o.words_[i]));
    }
    return c;
  }

  /// Index of the first set bit, or size() if none.
  std::size_t first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
      }
    }
    return n_;
  }

  bool operator==(const BitVector& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const BitVector& o) const { return !(*this == o); }

  /// Lexicographic order, bit 0 most significant, 0 < 1.
  bool lex_less(const BitVector& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != o.words_[i]) {
        // The lowest differing bit is the most significant difference.
        const std::uint64_t diff = words_[i] ^ o.words_[i];
        const int b = std::countr_zero(diff);
        return ((words_[i] >> b) & 1) == 0;
      }
    }
    return false;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline BitVector operator^(BitVector a, const BitVector& b) {
  a ^= b;
  return a;
}

}  // namespace stabkit

#endif  // STABKIT_BIT_VECTOR_HPP
