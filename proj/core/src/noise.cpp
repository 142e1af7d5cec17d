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

#include "stabkit/noise.hpp"

#include <algorithm>

namespace stabkit {

LocationType location_type(const Location& loc) {
  switch (loc.kind) {
    case Location::Kind::kPrep:
      return LocationType::kPrep;
    case Location::Kind::kCnot:
      return LocationType::kGate2;
    case Location::Kind::kMeasure:
      return LocationType::kMeasure;
    case Location::Kind::kWait:
      return LocationType::kWait;
    default:
      return LocationType::kGate1;
  }
}

NoiseModel NoiseModel::depolarizing(double p) {
  NoiseModel m;
  m.kind = Kind::kDepolarizing;
  m.p_by_type.fill(p);
  return m;
}

NoiseModel NoiseModel::uncorrelated(const std::array<double, 5>& p_by_type,
                                    const std::array<double, 3>& pauli_weights) {
  NoiseModel m;
  m.kind = Kind::kUncorrelatedPauli;
  m.p_by_type = p_by_type;
  m.pauli_weights = pauli_weights;
  return m;
}

NoiseModel NoiseModel::adversarial(double p, Adversary adversary) {
  NoiseModel m;
  m.kind = Kind::kAdversarial;
  m.p_by_type.fill(p);
  m.adversary = std::move(adversary);
  return m;
}

NoiseModel NoiseModel::with_rate(double p) const {
  NoiseModel m = *this;
  if (kind == Kind::kDepolarizing || kind == Kind::kAdversarial) {
    m.p_by_type.fill(p);
  } else {
    const double base = p_by_type[static_cast<std::size_t>(LocationType::kWait)];
    const double scale = base > 0 ? p / base : 0.0;
    for (auto& v : m.p_by_type) v *= scale;
  }
  return m;
}

PauliOperator NoiseModel::sample_fault(const Circuit& circuit, std::size_t location,
                                       std::mt19937_64& rng) const {
  const Location& loc = circuit.locations[location];
  const auto qubits = loc.qubits();
  const std::size_t n = circuit.n_qubits;
  if (qubits.size() == 1 && kind == Kind::kUncorrelatedPauli) {
    std::discrete_distribution<int> dist(pauli_weights.begin(), pauli_weights.end());
    return PauliOperator::single(n, qubits[0], "XYZ"[dist(rng)]);
  }
  // Uniform over the nontrivial Paulis on the support.
  const std::size_t combos = (std::size_t{1} << (2 * qubits.size())) - 1;
  const std::size_t pick = 1 + rng() % combos;
  BitVector x(n), z(n);
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    x.set(qubits[i], (pick >> (2 * i)) & 1);
    z.set(qubits[i], (pick >> (2 * i + 1)) & 1);
  }
  return PauliOperator::from_xz(n, std::move(x), std::move(z));
}

void NoiseModel::sample_range(const Circuit& circuit, std::size_t begin, std::size_t end,
                              std::mt19937_64& rng, FaultPattern& out) const {
  if (end <= begin) return;
  std::vector<std::size_t> hit;
  bool uniform = true;
  for (std::size_t k = 1; k < p_by_type.size(); ++k) {
    if (p_by_type[k] != p_by_type[0]) uniform = false;
  }
  if (uniform) {
    // One binomial draw for the fault count, then distinct positions.
    const double p = p_by_type[0];
    if (p <= 0) return;
    std::binomial_distribution<std::size_t> count(end - begin, p);
    std::size_t k = count(rng);
    while (hit.size() < k) {
      const std::size_t cand = begin + rng() % (end - begin);
      bool dup = false;
      for (auto h : hit) dup |= h == cand;
      if (!dup) hit.push_back(cand);
    }
    std::sort(hit.begin(), hit.end());
  } else {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t i = begin; i < end; ++i) {
      if (coin(rng) < rate(circuit.locations[i])) hit.push_back(i);
    }
  }
  if (hit.empty()) return;
  if (kind == Kind::kAdversarial && adversary) {
    const auto chosen = adversary(circuit, hit);
    for (std::size_t j = 0; j < hit.size(); ++j) {
      if (!chosen[j].is_identity()) out.faults.push_back({hit[j], chosen[j]});
    }
    return;
  }
  for (auto i : hit) out.faults.push_back({i, sample_fault(circuit, i, rng)});
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 over the combined value.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace stabkit
