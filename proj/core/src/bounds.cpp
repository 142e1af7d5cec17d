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

#include "stabkit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stabkit {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= n - i;
    num /= i + 1;
  }
  return num;
}

BigInt pauli_sphere_size(std::uint64_t n, std::uint64_t w) {
  BigInt total = 0;
  BigInt pow3 = 1;
  for (std::uint64_t j = 0; j <= w; ++j) {
    total += pow3 * binomial(n, j);
    pow3 *= 3;
  }
  return total;
}

bool hamming_bound(std::uint64_t n, std::uint64_t k, std::uint64_t t) {
  return pauli_sphere_size(n, t) * (BigInt(1) << k) <= (BigInt(1) << n);
}

bool hamming_bound_equality(std::uint64_t n, std::uint64_t k, std::uint64_t t) {
  return pauli_sphere_size(n, t) * (BigInt(1) << k) == (BigInt(1) << n);
}

bool gv_bound(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  if (d == 0) throw std::domain_error("distance must be positive");
  return pauli_sphere_size(n, d - 1) * (BigInt(1) << k) <= (BigInt(1) << n);
}

bool singleton_bound(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  // n - k >= 2d - 2, kept in unsigned-safe form.
  return n >= k + 2 * d - 2;
}

namespace {

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

}  // namespace

std::pair<double, double> asymptotic_rate_bounds(double p) {
  if (!(p > 0.0) || p > 0.25) {
    throw std::domain_error("relative distance p must lie in (0, 1/4]");
  }
  const double log2_3 = std::log2(3.0);
  double lower = 1.0 - 2.0 * p * log2_3 - binary_entropy(2.0 * p);
  double upper = 1.0 - p * log2_3 - binary_entropy(p);
  lower = std::clamp(lower, 0.0, 1.0);
  upper = std::clamp(upper, 0.0, 1.0);
  return {lower, upper};
}

}  // namespace stabkit
