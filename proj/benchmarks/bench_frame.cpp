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

#include <benchmark/benchmark.h>

#include "stabkit/exrec.hpp"
#include "stabkit/monte_carlo.hpp"
#include "stabkit/registry.hpp"

namespace {

using namespace stabkit;

void BM_SteaneEcPropagation(benchmark::State& state) {
  const Gadget g = steane_ec(steane_code());
  FaultPattern fault;
  fault.faults.push_back(
      {g.circuit.locations.size() / 2, PauliOperator::single(g.circuit.n_qubits, 0, 'X')});
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(g.circuit, g.rules, fault));
  }
}
BENCHMARK(BM_SteaneEcPropagation)->Unit(benchmark::kMicrosecond);

void BM_CnotExRecTrial(benchmark::State& state) {
  const auto harness = make_cnot_exrec(steane_code());
  const auto noise = NoiseModel::depolarizing(1e-3);
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_propagate(harness.full, noise, rng, {harness.leading_end}));
  }
}
BENCHMARK(BM_CnotExRecTrial)->Unit(benchmark::kMicrosecond);

void BM_ExRecCorrectness(benchmark::State& state) {
  const auto harness = make_cnot_exrec(steane_code());
  FaultPattern fault;
  fault.faults.push_back({harness.leading_end,
                          PauliOperator::single(harness.full.circuit.n_qubits, 0, 'Y')});
  for (auto _ : state) {
    benchmark::DoNotOptimize(exrec_correct(harness, fault, {}));
  }
}
BENCHMARK(BM_ExRecCorrectness)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
