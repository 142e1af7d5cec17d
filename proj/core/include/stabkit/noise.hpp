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

#ifndef STABKIT_NOISE_HPP
#define STABKIT_NOISE_HPP

#include <array>
#include <functional>
#include <random>

#include "stabkit/pauli_frame.hpp"

namespace stabkit {

enum class LocationType : std::uint8_t { kPrep, kGate1, kGate2, kMeasure, kWait };

LocationType location_type(const Location& loc);

/// Stochastic Pauli fault models. Every variant samples fault locations
/// independently per location (probability by location type); the fault
/// content is a nontrivial Pauli on the location's qubits:
///  - uncorrelated_pauli: per-type probabilities and a single-qubit Pauli
///    distribution (two-qubit faults uniform over the 15 nontrivial pairs);
///  - depolarizing: one rate, uniform Pauli choice;
///  - adversarial_stochastic: locations sampled stochastically, contents
///    chosen by a hook (which may pick the identity, turning a fault off).
struct NoiseModel {
  enum class Kind { kUncorrelatedPauli, kDepolarizing, kAdversarial };

  using Adversary = std::function<std::vector<PauliOperator>(
      const Circuit&, const std::vector<std::size_t>& locations)>;

  Kind kind = Kind::kDepolarizing;
  std::array<double, 5> p_by_type{};       // indexed by LocationType
  std::array<double, 3> pauli_weights{1, 1, 1};  // X, Y, Z (uncorrelated variant)
  Adversary adversary;

  static NoiseModel depolarizing(double p);
  static NoiseModel uncorrelated(const std::array<double, 5>& p_by_type,
                                 const std::array<double, 3>& pauli_weights);
  static NoiseModel adversarial(double p, Adversary adversary);

  double rate(const Location& loc) const {
    return p_by_type[static_cast<std::size_t>(location_type(loc))];
  }

  /// Uniform rate accessor for grids (depolarizing).
  double uniform_rate() const { return p_by_type[0]; }

  /// Scales all per-type rates so the wait-type rate becomes p (used by
  /// monotone grids). For depolarizing, sets every rate to p.
  NoiseModel with_rate(double p) const;

  /// Samples faults for locations [begin, end) of the circuit, appending
  /// to `out`. Every location is an independent Bernoulli trial.
  void sample_range(const Circuit& circuit, std::size_t begin, std::size_t end,
                    std::mt19937_64& rng, FaultPattern& out) const;

  /// Samples the fault content for one faulty location.
  PauliOperator sample_fault(const Circuit& circuit, std::size_t location,
                             std::mt19937_64& rng) const;
};

/// Deterministic stream splitting: one master seed fans out to per-trial
/// generators so results are independent of thread count.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace stabkit

#endif  // STABKIT_NOISE_HPP
