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

#ifndef STABKIT_MONTE_CARLO_HPP
#define STABKIT_MONTE_CARLO_HPP

#include "stabkit/exrec.hpp"
#include "stabkit/noise.hpp"

namespace stabkit {

struct MonteCarloReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t retry_exhausted = 0;  // verify-discard loops that hit the cap
  double failure_rate = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 0.0;
  std::uint64_t seed = 0;
};

/// 95% Wilson score interval for x successes in n trials.
std::pair<double, double> wilson_interval(std::uint64_t x, std::uint64_t n);

/// One Monte Carlo execution of a gadget under the noise model: faults are
/// sampled per location, verify-and-discard segments retry with fresh
/// faults (up to retry_limit), and rules run on the way.
struct McRun {
  PauliFrame frame{0};
  std::vector<bool> flips;
  std::vector<bool> logical_flips;
  std::vector<PauliFrame> captures;
  bool retry_exhausted = false;
  std::size_t faults_sampled = 0;
};

McRun mc_propagate(const Gadget& gadget, const NoiseModel& noise, std::mt19937_64& rng,
                   const std::vector<std::size_t>& capture_after = {},
                   std::size_t retry_limit = 100);

/// Monte Carlo estimate of the ExRec failure rate: faults are sampled over
/// the whole rectangle with clean inputs; a trial fails when the decoded
/// output after the trailing ECs differs from the ideal gate applied to the
/// decode taken right after the leading ECs. Trials are split across
/// threads with per-trial seeds derived from the master seed, so the result
/// does not depend on the job count.
MonteCarloReport simulate_exrec(const ExRecHarness& harness, const NoiseModel& noise,
                                std::uint64_t seed, std::uint64_t trials, std::size_t jobs);

/// Monte Carlo over a whole fault-tolerant protocol: a trial fails when any
/// logical measurement outcome flips relative to the fault-free reference.
MonteCarloReport simulate_protocol(const FTProtocol& protocol, const NoiseModel& noise,
                                   std::uint64_t seed, std::uint64_t trials, std::size_t jobs);

}  // namespace stabkit

#endif  // STABKIT_MONTE_CARLO_HPP
