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

#include <random>

#include "stabkit/simulate.hpp"
#include "stabkit/tableau.hpp"

namespace {

using stabkit::Circuit;
using stabkit::PauliOperator;
using stabkit::Tableau;

// The performance budget behind the engine: a 1000-qubit random Clifford
// circuit with 1e5 gates should complete in seconds.
void BM_TableauRandomCircuit(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t gates = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 gen(12345);
  const Circuit circuit = stabkit::random_clifford_circuit(n, gates, 0, gen);
  for (auto _ : state) {
    Tableau t(n);
    std::mt19937_64 rng(1);
    stabkit::run_tableau(circuit, t, rng);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(gates));
}
BENCHMARK(BM_TableauRandomCircuit)
    ->Args({100, 10000})
    ->Args({1000, 100000})
    ->Unit(benchmark::kMillisecond);

void BM_TableauMeasurement(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(7);
  const Circuit circuit = stabkit::random_clifford_circuit(n, 20 * n, 0, gen);
  Tableau t(n);
  std::mt19937_64 rng(2);
  stabkit::run_tableau(circuit, t, rng);
  const PauliOperator z0 = PauliOperator::single(n, 0, 'Z');
  for (auto _ : state) {
    Tableau copy = t;
    benchmark::DoNotOptimize(copy.measure_pauli(z0, rng));
  }
}
BENCHMARK(BM_TableauMeasurement)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace
