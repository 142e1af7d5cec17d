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

#ifndef STABKIT_BOUNDS_HPP
#define STABKIT_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>

namespace stabkit {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Number of Pauli errors of weight at most w on n qubits:
/// sum_j 3^j C(n,j).
BigInt pauli_sphere_size(std::uint64_t n, std::uint64_t w);

/// Quantum Hamming bound for nondegenerate codes correcting t errors:
/// (sum_{j<=t} 3^j C(n,j)) 2^k <= 2^n. Exact integer arithmetic.
bool hamming_bound(std::uint64_t n, std::uint64_t k, std::uint64_t t);

/// True when the bound holds with equality (a perfect code's parameters).
bool hamming_bound_equality(std::uint64_t n, std::uint64_t k, std::uint64_t t);

/// Quantum Gilbert-Varshamov bound: an [[n,k,d]] code exists when
/// (sum_{j<=d-1} 3^j C(n,j)) 2^k <= 2^n.
bool gv_bound(std::uint64_t n, std::uint64_t k, std::uint64_t d);

/// Quantum Singleton bound: n - k >= 2d - 2.
bool singleton_bound(std::uint64_t n, std::uint64_t k, std::uint64_t d);

/// Asymptotic rate window for nondegenerate codes at relative distance
/// p = d/2n: lower = 1 - 2p log2(3) - H(2p), upper = 1 - p log2(3) - H(p),
/// both clamped to [0,1]. Requires 0 < p <= 1/4.
std::pair<double, double> asymptotic_rate_bounds(double p);

}  // namespace stabkit

#endif  // STABKIT_BOUNDS_HPP
