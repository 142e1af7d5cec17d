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

#include "stabkit/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace stabkit {

std::pair<double, double> wilson_interval(std::uint64_t x, std::uint64_t n) {
  if (n == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;  // 95%
  const double z2 = z * z;
  const double phat = static_cast<double>(x) / static_cast<double>(n);
  const double denom = 1.0 + z2 / static_cast<double>(n);
  const double center = phat + z2 / (2.0 * static_cast<double>(n));
  const double margin =
      z * std::sqrt(phat * (1.0 - phat) / static_cast<double>(n) +
                    z2 / (4.0 * static_cast<double>(n) * static_cast<double>(n)));
  return {std::max(0.0, (center - margin) / denom), std::min(1.0, (center + margin) / denom)};
}

namespace {

// Walks the circuit in segments; retryable segments are re-sampled and
// re-run on rejection. Rules are fired in order; classical state (flips,
// logical flips) rolls back cleanly on retry because measurement indices
// are stable across attempts.
struct SegmentWalker {
  const Gadget& gadget;
  const NoiseModel& noise;
  std::mt19937_64& rng;
  std::size_t retry_limit;

  McRun run(const std::vector<std::size_t>& capture_after) {
    McRun out;
    const Circuit& circuit = gadget.circuit;
    out.frame = PauliFrame(circuit.n_qubits);

    // Ordered rule cursor.
    std::vector<const ClassicalRule*> rules;
    for (const auto& r : gadget.rules) rules.push_back(&r);
    std::stable_sort(rules.begin(), rules.end(),
                     [](const ClassicalRule* a, const ClassicalRule* b) {
                       return a->after_location < b->after_location;
                     });

    // Ranges: segments plus the gaps between them, in location order, with
    // extra splits at the capture boundaries so captures see the frame at
    // exactly the requested cut.
    struct Range {
      std::size_t begin, end;
      bool retry;
    };
    std::vector<std::size_t> captures_sorted = capture_after;
    std::sort(captures_sorted.begin(), captures_sorted.end());
    std::vector<Range> ranges;
    std::size_t cursor = 0;
    auto push_plain = [&](std::size_t begin, std::size_t end) {
      for (auto cut : captures_sorted) {
        if (cut > begin && cut < end) {
          ranges.push_back({begin, cut, false});
          begin = cut;
        }
      }
      if (end > begin) ranges.push_back({begin, end, false});
    };
    for (const auto& seg : gadget.segments) {
      if (seg.begin > cursor) push_plain(cursor, seg.begin);
      ranges.push_back({seg.begin, seg.end, seg.retry_on_reject});
      cursor = seg.end;
    }
    if (cursor < circuit.locations.size()) push_plain(cursor, circuit.locations.size());

    // Presample every range once; a trial with no faults anywhere cannot
    // fail or reject, so it can skip propagation entirely.
    std::vector<FaultPattern> presampled(ranges.size());
    std::size_t presampled_total = 0;
    for (std::size_t r = 0; r < ranges.size(); ++r) {
      noise.sample_range(gadget.circuit, ranges[r].begin, ranges[r].end, rng, presampled[r]);
      presampled_total += presampled[r].size();
    }
    if (presampled_total == 0) {
      out.faults_sampled = 0;
      return out;
    }

    // Sampled reference outcomes for gadgets that need them.
    std::vector<bool> reference_bits;
    if (!gadget.random_reference_bits.empty()) {
      std::size_t nbits = 0;
      for (auto i : gadget.random_reference_bits) nbits = std::max(nbits, i + 1);
      reference_bits.assign(nbits, false);
      for (auto i : gadget.random_reference_bits) reference_bits[i] = rng() & 1;
    }

    std::size_t rule_cursor = 0;
    std::size_t capture_cursor = 0;

    for (const auto& range : ranges) {
      const std::size_t rule_start = rule_cursor;
      const std::size_t flips_start = out.flips.size();
      const std::size_t logflips_start = out.logical_flips.size();
      const PauliFrame frame_snapshot = out.frame;

      const std::size_t range_index = static_cast<std::size_t>(&range - ranges.data());
      std::size_t attempts = 0;
      for (;;) {
        ++attempts;
        FaultPattern faults;
        if (attempts == 1) {
          faults = presampled[range_index];
        } else {
          noise.sample_range(gadget.circuit, range.begin, range.end, rng, faults);
        }
        out.faults_sampled += faults.size();

        FrameRun run_view(out.frame, out.flips);
        if (!reference_bits.empty()) run_view.set_reference_bits(&reference_bits);
        rule_cursor = rule_start;
        bool done = true;
        for (std::size_t i = range.begin; i < range.end; ++i) {
          const Location& loc = circuit.locations[i];
          // Faults at this location.
          auto apply_faults = [&]() {
            for (const auto& f : faults.faults) {
              if (f.location == i) out.frame.multiply(f.error);
            }
          };
          if (loc.kind == Location::Kind::kMeasure) {
            apply_faults();
            out.flips.push_back(out.frame.flips_measurement(loc.measured));
          } else {
            switch (loc.kind) {
              case Location::Kind::kPrep:
                out.frame.clear_qubit(loc.q0);
                break;
              case Location::Kind::kH:
                out.frame.apply_h(loc.q0);
                break;
              case Location::Kind::kP:
              case Location::Kind::kPDag:
                out.frame.apply_p(loc.q0);
                break;
              case Location::Kind::kCnot:
                out.frame.apply_cnot(loc.q0, loc.q1);
                break;
              default:
                break;
            }
            apply_faults();
          }
          while (rule_cursor < rules.size() && rules[rule_cursor]->after_location == i) {
            rules[rule_cursor]->fn(run_view);
            ++rule_cursor;
          }
          if (run_view.rejected()) {
            done = false;
            break;
          }
        }
        if (done && !run_view.rejected()) {
          for (bool b : run_view.logical_flips()) out.logical_flips.push_back(b);
          break;
        }
        // Roll back and retry (or give up).
        out.frame = frame_snapshot;
        out.flips.resize(flips_start);
        out.logical_flips.resize(logflips_start);
        if (!range.retry || attempts >= retry_limit) {
          out.retry_exhausted = true;
          // Continue with the clean rolled-back state so the walk stays
          // well formed; the caller surfaces the exhaustion.
          rule_cursor = rule_start;
          FrameRun clean_view(out.frame, out.flips);
          if (!reference_bits.empty()) clean_view.set_reference_bits(&reference_bits);
          for (std::size_t i = range.begin; i < range.end; ++i) {
            const Location& loc = circuit.locations[i];
            if (loc.kind == Location::Kind::kMeasure) {
              out.flips.push_back(out.frame.flips_measurement(loc.measured));
            } else {
              switch (loc.kind) {
                case Location::Kind::kPrep:
                  out.frame.clear_qubit(loc.q0);
                  break;
                case Location::Kind::kH:
                  out.frame.apply_h(loc.q0);
                  break;
                case Location::Kind::kP:
                case Location::Kind::kPDag:
                  out.frame.apply_p(loc.q0);
                  break;
                case Location::Kind::kCnot:
                  out.frame.apply_cnot(loc.q0, loc.q1);
                  break;
                default:
                  break;
              }
            }
            while (rule_cursor < rules.size() && rules[rule_cursor]->after_location == i) {
              rules[rule_cursor]->fn(clean_view);
              ++rule_cursor;
            }
          }
          for (bool b : clean_view.logical_flips()) out.logical_flips.push_back(b);
          break;
        }
      }

      while (capture_cursor < captures_sorted.size() &&
             captures_sorted[capture_cursor] <= range.end) {
        out.captures.push_back(out.frame);
        ++capture_cursor;
      }
    }
    return out;
  }
};

}  // namespace

McRun mc_propagate(const Gadget& gadget, const NoiseModel& noise, std::mt19937_64& rng,
                   const std::vector<std::size_t>& capture_after, std::size_t retry_limit) {
  SegmentWalker walker{gadget, noise, rng, retry_limit};
  return walker.run(capture_after);
}

namespace {

MonteCarloReport run_trials(std::uint64_t seed, std::uint64_t trials, std::size_t jobs,
                            const std::function<bool(std::mt19937_64&, bool*)>& one_trial) {
  MonteCarloReport report;
  report.trials = trials;
  report.seed = seed;
  std::atomic<std::uint64_t> next{0}, failures{0}, exhausted{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t trial = next.fetch_add(1);
      if (trial >= trials) break;
      std::mt19937_64 rng(split_seed(seed, trial));
      bool ex = false;
      if (one_trial(rng, &ex)) ++failures;
      if (ex) ++exhausted;
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t j = 0; j < std::max<std::size_t>(1, jobs); ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  report.failures = failures;
  report.retry_exhausted = exhausted;
  report.failure_rate = trials ? static_cast<double>(report.failures) / trials : 0.0;
  std::tie(report.wilson_lo, report.wilson_hi) = wilson_interval(report.failures, trials);
  return report;
}

}  // namespace

MonteCarloReport simulate_exrec(const ExRecHarness& harness, const NoiseModel& noise,
                                std::uint64_t seed, std::uint64_t trials, std::size_t jobs) {
  const Gadget& g = harness.full;
  const FrameDecoder dec(*g.code);

  auto one_trial = [&](std::mt19937_64& rng, bool* exhausted) -> bool {
    McRun run = mc_propagate(g, noise, rng, {harness.leading_end});
    *exhausted = run.retry_exhausted;
    if (run.faults_sampled == 0) return false;

    std::vector<FrameDecoder::Decoded> expect;
    const PauliFrame& lead = run.captures.at(0);
    for (const auto& block : g.input_blocks) expect.push_back(dec.decode(lead.restrict_to(block)));
    if (harness.ideal_gate == "H") {
      std::swap(expect[0].x_class, expect[0].z_class);
    } else if (harness.ideal_gate == "P") {
      expect[0].z_class ^= expect[0].x_class;
    } else if (harness.ideal_gate == "CNOT") {
      expect[1].x_class ^= expect[0].x_class;
      expect[0].z_class ^= expect[1].z_class;
    }
    for (std::size_t b = 0; b < g.output_blocks.size(); ++b) {
      if (!(dec.decode(run.frame.restrict_to(g.output_blocks[b])) == expect[b])) return true;
    }
    return false;
  };
  return run_trials(seed, trials, jobs, one_trial);
}

MonteCarloReport simulate_protocol(const FTProtocol& protocol, const NoiseModel& noise,
                                   std::uint64_t seed, std::uint64_t trials, std::size_t jobs) {
  const Gadget& g = protocol.encoded;
  auto one_trial = [&](std::mt19937_64& rng, bool* exhausted) -> bool {
    McRun run = mc_propagate(g, noise, rng, {});
    *exhausted = run.retry_exhausted;
    for (bool flip : run.logical_flips) {
      if (flip) return true;
    }
    return false;
  };
  return run_trials(seed, trials, jobs, one_trial);
}

}  // namespace stabkit
