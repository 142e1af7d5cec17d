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

#include "stabkit/knill_laflamme.hpp"
#include "stabkit/registry.hpp"

namespace {

using namespace stabkit;

void BM_DistanceNineQubit(benchmark::State& state) {
  const auto& code = shor_code();
  for (auto _ : state) {
    benchmark::DoNotOptimize(code.distance());
  }
}
BENCHMARK(BM_DistanceNineQubit)->Unit(benchmark::kMicrosecond);

void BM_SyndromeDecoderBuild(benchmark::State& state) {
  const auto& code = shor_code();
  for (auto _ : state) {
    benchmark::DoNotOptimize(SyndromeDecoder(code));
  }
}
BENCHMARK(BM_SyndromeDecoderBuild)->Unit(benchmark::kMicrosecond);

void BM_KnillLaflammeNine(benchmark::State& state) {
  const auto& code = shor_code();
  const auto errors = weight_one_errors(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_knill_laflamme(code, errors));
  }
}
BENCHMARK(BM_KnillLaflammeNine)->Unit(benchmark::kMillisecond);

}  // namespace
