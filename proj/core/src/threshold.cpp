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

#include "stabkit/threshold.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace stabkit {

LevelReduction level_reduction_bound(double p, double a_count, std::size_t t,
                                     std::size_t count) {
  if (p < 0 || a_count < 1 || t < 1) throw std::domain_error("need p >= 0, A >= 1, t >= 1");
  LevelReduction out;
  out.p_threshold = std::pow(a_count, -1.0 / static_cast<double>(t));
  out.levels.reserve(count + 1);
  out.levels.push_back(p);
  for (std::size_t j = 1; j <= count; ++j) {
    out.levels.push_back(a_count * std::pow(out.levels.back(), static_cast<double>(t + 1)));
  }
  return out;
}

std::size_t levels_needed(double epsilon1, double p, double p_threshold, std::size_t t) {
  if (!(p > 0) || p >= p_threshold) throw std::domain_error("p must lie below the threshold");
  if (!(epsilon1 > 0) || epsilon1 >= p_threshold) {
    throw std::domain_error("target rate must lie below the threshold");
  }
  const double ratio = std::log(epsilon1 / p_threshold) / std::log(p / p_threshold);
  const double levels = std::log(ratio) / std::log(static_cast<double>(t + 1));
  return static_cast<std::size_t>(std::ceil(levels - 1e-12));
}

BigInt overhead_bound(const BigInt& gadget_size, std::size_t levels) {
  BigInt out = 1;
  for (std::size_t i = 0; i < levels; ++i) out *= gadget_size;
  return out;
}

BigInt count_fault_sets(std::size_t locations, std::size_t t) {
  return binomial(locations, t + 1);
}

MalignantReport malignant_count(const ExRecHarness& harness, std::size_t jobs) {
  MalignantReport report;
  const Gadget& g = harness.full;
  const std::size_t L = g.circuit.locations.size();
  report.locations = L;
  report.fault_sets = count_fault_sets(L, 1);

  std::vector<std::vector<PauliOperator>> alphabets(L);
  for (std::size_t i = 0; i < L; ++i) alphabets[i] = fault_alphabet(g.circuit, i);
  const std::vector<PauliOperator> no_inputs;

  std::atomic<std::size_t> next_i{0};
  std::atomic<std::uint64_t> malignant{0}, checked{0}, rejected{0};
  std::mutex mu;
  double weighted = 0.0;

  auto worker = [&]() {
    double my_weighted = 0.0;
    for (;;) {
      const std::size_t i = next_i.fetch_add(1);
      if (i >= L) break;
      for (std::size_t j = i + 1; j < L; ++j) {
        std::size_t failing = 0;
        const std::size_t total = alphabets[i].size() * alphabets[j].size();
        for (const auto& fi : alphabets[i]) {
          for (const auto& fj : alphabets[j]) {
            FaultPattern pattern;
            pattern.faults.push_back({i, fi});
            pattern.faults.push_back({j, fj});
            ++checked;
            bool was_rejected = false;
            if (!exrec_correct(harness, pattern, no_inputs, &was_rejected)) ++failing;
            if (was_rejected) ++rejected;
          }
        }
        if (failing > 0) {
          ++malignant;
          my_weighted += static_cast<double>(failing) / static_cast<double>(total);
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    weighted += my_weighted;
  };

  std::vector<std::thread> threads;
  for (std::size_t j = 0; j < std::max<std::size_t>(1, jobs); ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  report.malignant_pairs = malignant;
  report.weighted_pairs = weighted;
  report.assignments_checked = checked;
  report.assignments_rejected = rejected;
  report.p_threshold_bound =
      report.malignant_pairs ? 1.0 / static_cast<double>(report.malignant_pairs) : 0.0;
  return report;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& rate_by_p,
                          double exponent) {
  PowerLawFit fit;
  std::vector<double> logc;
  std::vector<double> logy;
  for (const auto& [p, rate] : rate_by_p) {
    if (rate <= 0 || p <= 0) continue;
    logc.push_back(std::log(rate) - exponent * std::log(p));
    logy.push_back(std::log(rate));
  }
  fit.points_used = logc.size();
  if (logc.empty()) return fit;
  double mean_c = 0;
  for (double v : logc) mean_c += v;
  mean_c /= static_cast<double>(logc.size());
  fit.c = std::exp(mean_c);

  double mean_y = 0;
  for (double v : logy) mean_y += v;
  mean_y /= static_cast<double>(logy.size());
  double ss_res = 0, ss_tot = 0;
  std::size_t idx = 0;
  for (const auto& [p, rate] : rate_by_p) {
    if (rate <= 0 || p <= 0) continue;
    const double predicted = mean_c + exponent * std::log(p);
    ss_res += (logy[idx] - predicted) * (logy[idx] - predicted);
    ss_tot += (logy[idx] - mean_y) * (logy[idx] - mean_y);
    ++idx;
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

PseudoThresholdResult pseudo_threshold(const ExRecHarness& harness, const NoiseModel& family,
                                       double p_lo, double p_hi, std::uint64_t seed,
                                       std::uint64_t trials, std::size_t jobs,
                                       std::size_t max_iterations) {
  PseudoThresholdResult result;
  auto evaluate = [&](double p) -> const MonteCarloReport& {
    const auto model = family.with_rate(p);
    result.evaluations.push_back(
        {p, simulate_exrec(harness, model, split_seed(seed, result.evaluations.size()), trials,
                           jobs)});
    return result.evaluations.back().report;
  };

  // Significantly below the line at p: CI entirely under the diagonal.
  auto below = [](const MonteCarloReport& r, double p) { return r.wilson_hi < p; };
  auto above = [](const MonteCarloReport& r, double p) { return r.wilson_lo > p; };

  double lo = p_lo, hi = p_hi;
  if (!below(evaluate(lo), lo) || !above(evaluate(hi), hi)) {
    return result;  // no certified sign change on the given bracket
  }

  for (std::size_t iter = 0; iter < max_iterations && hi / lo > 4.0; ++iter) {
    const double mid = std::sqrt(lo * hi);
    const auto& r = evaluate(mid);
    if (below(r, mid)) {
      lo = mid;
    } else if (above(r, mid)) {
      hi = mid;
    } else {
      break;  // interval straddles the diagonal at this budget
    }
  }
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.estimate = std::sqrt(lo * hi);
  result.conclusive = hi / lo <= 4.0;
  return result;
}

}  // namespace stabkit
