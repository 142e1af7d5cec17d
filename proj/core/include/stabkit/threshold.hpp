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

#ifndef STABKIT_THRESHOLD_HPP
#define STABKIT_THRESHOLD_HPP

#include "stabkit/bounds.hpp"
#include "stabkit/monte_carlo.hpp"

namespace stabkit {

/// The level-reduction recursion p^(j) = A (p^(j-1))^{t+1}, with the
/// threshold p_T = A^{-1/t} it fixes.
struct LevelReduction {
  std::vector<double> levels;  // p^(0) .. p^(L)
  double p_threshold = 0.0;
};
LevelReduction level_reduction_bound(double p, double a_count, std::size_t t, std::size_t count);

/// Levels needed for a target per-location error rate:
/// L = ceil( log_{t+1}( log(eps1/p_T) / log(p/p_T) ) ). Throws
/// std::domain_error at or above threshold.
std::size_t levels_needed(double epsilon1, double p, double p_threshold, std::size_t t);

/// Exact G^L.
BigInt overhead_bound(const BigInt& gadget_size, std::size_t levels);

/// Number of candidate bad fault sets: C(locations, t+1).
BigInt count_fault_sets(std::size_t locations, std::size_t t);

/// Exhaustive malignant-pair enumeration over an ExRec at t=1: a pair of
/// locations is malignant when some assignment of nontrivial Pauli faults
/// to both makes the rectangle incorrect (clean inputs; assignments that
/// trigger an ancilla discard count as benign, matching the Monte Carlo
/// retry semantics).
struct MalignantReport {
  std::size_t locations = 0;
  BigInt fault_sets;               // C(N, 2)
  std::uint64_t malignant_pairs = 0;
  /// Sum over pairs of the fraction of assignments that fail: the
  /// leading-order coefficient of the c p^2 failure-rate fit under
  /// depolarizing noise.
  double weighted_pairs = 0.0;
  /// 1 / malignant_pairs: the tighter threshold bound at t=1.
  double p_threshold_bound = 0.0;
  std::uint64_t assignments_checked = 0;
  std::uint64_t assignments_rejected = 0;
};
MalignantReport malignant_count(const ExRecHarness& harness, std::size_t jobs);

/// One-parameter power-law fit rate = c * p^exponent on log-log axes.
struct PowerLawFit {
  double c = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& rate_by_p,
                          double exponent);

/// Monte Carlo bisection for the crossing failure_rate(p) = p. Declared
/// conclusive only when the bracket endpoints' 95% intervals separate from
/// the line on both sides and the bracket is narrower than a factor 4.
struct PseudoThresholdResult {
  bool conclusive = false;
  double estimate = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  struct Point {
    double p = 0.0;
    MonteCarloReport report;
  };
  std::vector<Point> evaluations;
};
PseudoThresholdResult pseudo_threshold(const ExRecHarness& harness, const NoiseModel& family,
                                       double p_lo, double p_hi, std::uint64_t seed,
                                       std::uint64_t trials, std::size_t jobs,
                                       std::size_t max_iterations = 12);

}  // namespace stabkit

#endif  // STABKIT_THRESHOLD_HPP
