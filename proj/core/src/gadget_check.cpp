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

#include "stabkit/gadget_check.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace stabkit {

FrameDecoder::FrameDecoder(const StabilizerCode& code) : code_(&code), decoder_(code) {
  stab_rows_ = GF2Matrix(0, 2 * code.num_qubits());
  for (const auto& g : code.generators()) stab_rows_.append_row(symplectic_row(g));
  stab_plus_z_ = stab_rows_;
  stab_plus_x_ = stab_rows_;
  if (code.num_logical() > 0) {
    if (!code.has_logicals()) throw std::logic_error("FrameDecoder needs logical operators");
    stab_plus_z_.append_row(symplectic_row(code.logical_z()[0]));
    stab_plus_x_.append_row(symplectic_row(code.logical_x()[0]));
  }
}

std::size_t FrameDecoder::filter_weight(const PauliOperator& block_frame) const {
  return decoder_.decode(code_->syndrome(block_frame)).weight();
}

FrameDecoder::Decoded FrameDecoder::decode(const PauliOperator& block_frame) const {
  const PauliOperator corrected =
      block_frame.multiply(decoder_.decode(code_->syndrome(block_frame)));
  const std::size_t k = code_->num_logical();
  Decoded out{BitVector(k), BitVector(k)};
  for (std::size_t i = 0; i < k; ++i) {
    out.x_class.set(i, corrected.anticommutes_with(code_->logical_z()[i]));
    out.z_class.set(i, corrected.anticommutes_with(code_->logical_x()[i]));
  }
  return out;
}

BitVector FrameDecoder::syndrome(const PauliOperator& block_frame) const {
  return code_->syndrome(block_frame);
}

bool FrameDecoder::fixes_prepared_state(const PauliOperator& block_frame, char basis) const {
  const PauliOperator corrected =
      block_frame.multiply(decoder_.decode(code_->syndrome(block_frame)));
  const GF2Matrix& space = basis == '0' ? stab_plus_z_ : stab_plus_x_;
  return space.in_row_space(symplectic_row(corrected));
}

const char* property_name(GadgetProperty p) {
  switch (p) {
    case GadgetProperty::kPrepA:
      return "prepa";
    case GadgetProperty::kPrepB:
      return "prepb";
    case GadgetProperty::kGateA:
      return "gatea";
    case GadgetProperty::kGateB:
      return "gateb";
    case GadgetProperty::kMeas:
      return "meas";
    case GadgetProperty::kEcA:
      return "eca";
    case GadgetProperty::kEcB:
      return "ecb";
  }
  return "?";
}

GadgetProperty property_from_name(const std::string& name) {
  for (GadgetProperty p : {GadgetProperty::kPrepA, GadgetProperty::kPrepB, GadgetProperty::kGateA,
                           GadgetProperty::kGateB, GadgetProperty::kMeas, GadgetProperty::kEcA,
                           GadgetProperty::kEcB}) {
    if (name == property_name(p)) return p;
  }
  throw std::invalid_argument("unknown gadget property: " + name);
}

namespace {

// Logical class transition of the ideal gate, k=1 blocks.
void apply_ideal_gate(const std::string& gate, std::vector<FrameDecoder::Decoded>& classes) {
  if (gate == "I" || gate == "X" || gate == "Z" || gate == "WAIT" || gate.empty()) return;
  if (gate == "H") {
    std::swap(classes[0].x_class, classes[0].z_class);
    return;
  }
  if (gate == "P") {
    // X -> XZ up to phase; Z fixed.
    classes[0].z_class ^= classes[0].x_class;
    return;
  }
  if (gate == "CNOT") {
    // X1 -> X1 X2, Z2 -> Z1 Z2.
    classes[1].x_class ^= classes[0].x_class;
    classes[0].z_class ^= classes[1].z_class;
    return;
  }
  throw std::invalid_argument("unknown ideal gate: " + gate);
}

// Input residual choices for one block: identity plus every Pauli of weight
// <= r on the block.
std::vector<PauliOperator> block_inputs(std::size_t n, std::size_t r) {
  std::vector<PauliOperator> out;
  out.push_back(PauliOperator(n));
  for (std::size_t w = 1; w <= r && w <= n; ++w) {
    for_each_pauli_of_weight(n, w, [&](const PauliOperator& p) {
      out.push_back(p);
      return true;
    });
  }
  return out;
}

struct Failure {
  std::uint64_t order = ~std::uint64_t{0};
  FaultPattern pattern;
  std::vector<PauliOperator> inputs;
  std::vector<bool> reference;
  std::string detail;
};

}  // namespace

GadgetCheckReport check_property(const Gadget& gadget, GadgetProperty property,
                                 const GadgetCheckOptions& options) {
  GadgetCheckReport report;
  report.gadget = gadget.name;
  report.property = property;
  report.fault_budget = options.fault_budget;
  report.input_weight = options.input_weight;
  report.t = options.t;

  if (!gadget.circuit.is_clifford_only()) {
    throw std::invalid_argument("property checks need a Clifford gadget (dense path required)");
  }
  const StabilizerCode& code = *gadget.code;
  const FrameDecoder dec(code);
  const std::size_t n_blocks_in = gadget.input_blocks.size();

  const bool needs_inputs = property == GadgetProperty::kGateA ||
                            property == GadgetProperty::kGateB ||
                            property == GadgetProperty::kMeas ||
                            property == GadgetProperty::kEcA || property == GadgetProperty::kEcB;

  // Input residual combinations across blocks (single flattened index).
  const std::vector<PauliOperator> per_block =
      needs_inputs && n_blocks_in > 0
          ? block_inputs(code.num_qubits(), options.input_weight)
          : std::vector<PauliOperator>{PauliOperator(code.num_qubits())};
  std::uint64_t input_combos = 1;
  for (std::size_t b = 0; b < n_blocks_in; ++b) input_combos *= per_block.size();
  if (!needs_inputs || n_blocks_in == 0) input_combos = 1;

  // Location subsets of size 0..s.
  std::vector<std::vector<std::size_t>> subsets;
  subsets.push_back({});
  const std::size_t L = gadget.circuit.locations.size();
  std::vector<std::size_t> stack;
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t start, std::size_t left) {
    if (left == 0) return;
    for (std::size_t i = start; i < L; ++i) {
      stack.push_back(i);
      subsets.push_back(stack);
      gen(i + 1, left - 1);
      stack.pop_back();
    }
  };
  gen(0, options.fault_budget);

  // Alphabets per location.
  std::vector<std::vector<PauliOperator>> alphabets(L);
  for (std::size_t i = 0; i < L; ++i) alphabets[i] = fault_alphabet(gadget.circuit, i);

  // Reference branches.
  std::vector<std::vector<bool>> branches;
  {
    std::size_t nbits = 0;
    for (auto i : gadget.random_reference_bits) nbits = std::max(nbits, i + 1);
    const std::size_t count = gadget.random_reference_bits.size();
    if (count > 10) throw ResourceLimitError("too many random reference bits to enumerate");
    for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
      std::vector<bool> bits(nbits, false);
      for (std::size_t j = 0; j < count; ++j) {
        bits[gadget.random_reference_bits[j]] = (mask >> j) & 1;
      }
      branches.push_back(std::move(bits));
    }
  }

  // Guard on total propagations.
  std::uint64_t total_cases = 0;
  for (const auto& sub : subsets) {
    std::uint64_t a = 1;
    for (auto loc : sub) a *= alphabets[loc].size();
    total_cases += a;
  }
  total_cases *= input_combos * branches.size();
  if (total_cases > options.pattern_cap) {
    throw ResourceLimitError("pattern count " + std::to_string(total_cases) +
                             " exceeds the configured cap");
  }

  std::atomic<std::size_t> next_subset{0};
  std::mutex merge_mutex;
  Failure best_failure;
  std::atomic<std::uint64_t> patterns{0}, cases{0}, rejected{0};

  auto evaluate = [&](const FrameResult& result, const std::vector<PauliOperator>& inputs,
                      std::size_t n_faults, std::string& why) -> bool {
    // Filter weights of the inputs feed the A-property bounds.
    std::size_t input_filter_total = 0;
    std::vector<std::size_t> input_filters(inputs.size(), 0);
    for (std::size_t b = 0; b < inputs.size(); ++b) {
      input_filters[b] = dec.filter_weight(inputs[b]);
      input_filter_total += input_filters[b];
    }

    switch (property) {
      case GadgetProperty::kPrepA: {
        for (const auto& block : gadget.output_blocks) {
          const auto out = result.frame.restrict_to(block);
          if (dec.filter_weight(out) > n_faults) {
            why = "output residual " + out.to_string() + " exceeds the fault count";
            return false;
          }
        }
        return true;
      }
      case GadgetProperty::kPrepB: {
        if (n_faults > options.t) return true;
        for (const auto& block : gadget.output_blocks) {
          const auto out = result.frame.restrict_to(block);
          if (!dec.fixes_prepared_state(out, options.prep_basis)) {
            why = "decoded output " + out.to_string() + " is not the prepared state";
            return false;
          }
        }
        return true;
      }
      case GadgetProperty::kEcA: {
        for (const auto& block : gadget.output_blocks) {
          const auto out = result.frame.restrict_to(block);
          if (dec.filter_weight(out) > n_faults) {
            why = "output residual " + out.to_string() + " exceeds the fault count";
            return false;
          }
        }
        return true;
      }
      case GadgetProperty::kEcB: {
        if (input_filter_total + n_faults > options.t) return true;
        for (std::size_t b = 0; b < gadget.output_blocks.size(); ++b) {
          const auto out = result.frame.restrict_to(gadget.output_blocks[b]);
          if (!(dec.decode(out) == dec.decode(inputs[b]))) {
            why = "logical state changed: in " + inputs[b].to_string() + " out " +
                  out.to_string();
            return false;
          }
        }
        return true;
      }
      case GadgetProperty::kGateA: {
        const std::size_t bound = n_faults + input_filter_total;
        for (const auto& block : gadget.output_blocks) {
          const auto out = result.frame.restrict_to(block);
          if (dec.filter_weight(out) > bound) {
            why = "output residual " + out.to_string() + " exceeds faults plus input errors";
            return false;
          }
        }
        return true;
      }
      case GadgetProperty::kGateB: {
        if (input_filter_total + n_faults > options.t) return true;
        std::vector<FrameDecoder::Decoded> expect;
        for (const auto& in : inputs) expect.push_back(dec.decode(in));
        apply_ideal_gate(options.ideal_gate, expect);
        for (std::size_t b = 0; b < gadget.output_blocks.size(); ++b) {
          const auto out = result.frame.restrict_to(gadget.output_blocks[b]);
          if (!(dec.decode(out) == expect[b])) {
            why = "logical action differs from the ideal gate on block " + std::to_string(b);
            return false;
          }
        }
        return true;
      }
      case GadgetProperty::kMeas: {
        if (input_filter_total + n_faults > options.t) return true;
        if (result.logical_flips.empty()) {
          why = "gadget emitted no logical outcome";
          return false;
        }
        const bool ideal_flip = dec.decode(inputs[0]).x_class.get(0);
        if (result.logical_flips[0] != ideal_flip) {
          why = "measured logical flip differs from the ideally decoded input";
          return false;
        }
        return true;
      }
    }
    return false;
  };

  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&]() {
      Failure local;
      std::uint64_t my_patterns = 0, my_cases = 0, my_rejected = 0;
      for (;;) {
        const std::size_t si = next_subset.fetch_add(1);
        if (si >= subsets.size()) break;
        const auto& subset = subsets[si];

        // Odometer over the alphabet assignments of this subset.
        std::vector<std::size_t> digits(subset.size(), 0);
        for (;;) {
          FaultPattern pattern;
          for (std::size_t j = 0; j < subset.size(); ++j) {
            pattern.faults.push_back({subset[j], alphabets[subset[j]][digits[j]]});
          }
          ++my_patterns;

          for (std::uint64_t input_idx = 0; input_idx < input_combos; ++input_idx) {
            // Decompose the input index into per-block choices and seed the
            // frame with those residuals.
            std::vector<PauliOperator> inputs;
            if (needs_inputs) {
              std::uint64_t rest = input_idx;
              for (std::size_t b = 0; b < n_blocks_in; ++b) {
                inputs.push_back(per_block[rest % per_block.size()]);
                rest /= per_block.size();
              }
            }
            PauliFrame seed(gadget.circuit.n_qubits);
            {
              BitVector x(gadget.circuit.n_qubits), z(gadget.circuit.n_qubits);
              for (std::size_t b = 0; b < inputs.size(); ++b) {
                for (std::size_t i = 0; i < gadget.input_blocks[b].size(); ++i) {
                  if (inputs[b].x_bit(i)) x.set(gadget.input_blocks[b][i], true);
                  if (inputs[b].z_bit(i)) z.set(gadget.input_blocks[b][i], true);
                }
              }
              seed.multiply(PauliOperator::from_xz(gadget.circuit.n_qubits, x, z));
            }

            for (std::size_t br = 0; br < branches.size(); ++br) {
              ++my_cases;
              const FrameResult result =
                  propagate(gadget.circuit, gadget.rules, pattern, seed, &branches[br]);
              if (result.rejected) {
                ++my_rejected;
                continue;
              }
              std::string why;
              if (!evaluate(result, inputs, pattern.size(), why)) {
                const std::uint64_t order =
                    (static_cast<std::uint64_t>(si) << 32) ^ (input_idx << 8) ^ br;
                if (order < local.order) {
                  local.order = order;
                  local.pattern = pattern;
                  local.inputs = inputs;
                  local.reference = branches[br];
                  local.detail = why;
                }
              }
            }
          }

          // Advance the odometer.
          std::size_t pos = 0;
          while (pos < digits.size()) {
            if (++digits[pos] < alphabets[subset[pos]].size()) break;
            digits[pos] = 0;
            ++pos;
          }
          if (pos == digits.size() || digits.empty()) break;
        }
      }
      patterns += my_patterns;
      cases += my_cases;
      rejected += my_rejected;
      if (local.order != ~std::uint64_t{0}) {
        std::lock_guard<std::mutex> lock(merge_mutex);
        if (local.order < best_failure.order) best_failure = local;
      }
    });
  }
  for (auto& t : workers) t.join();

  report.patterns_checked = patterns;
  report.cases_checked = cases;
  report.rejected = rejected;
  report.passed = best_failure.order == ~std::uint64_t{0};
  if (!report.passed) {
    report.counterexample = best_failure.pattern;
    report.counterexample_inputs = best_failure.inputs;
    report.counterexample_reference = best_failure.reference;
    report.detail = best_failure.detail;
  }
  return report;
}

SupportClaimReport check_steane_support_claim(const Gadget& gadget, std::size_t max_violations) {
  SupportClaimReport report;
  const StabilizerCode& code = *gadget.code;
  const std::size_t n = code.num_qubits();

  // All normalizer elements modulo phase (codeword-to-codeword maps).
  std::vector<PauliOperator> normalizer;
  {
    std::vector<PauliOperator> gens = code.generators();
    gens.push_back(code.logical_x()[0]);
    gens.push_back(code.logical_z()[0]);
    for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
      PauliOperator prod(n);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if ((mask >> i) & 1) prod = prod.multiply(gens[i]);
      }
      normalizer.push_back(prod);
    }
  }
  // State stabilizers of the prepared ancillas.
  auto state_stabilizer = [&](char basis) {
    std::vector<PauliOperator> gens = code.generators();
    gens.push_back(basis == '0' ? code.logical_z()[0] : code.logical_x()[0]);
    std::vector<PauliOperator> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
      PauliOperator prod(n);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if ((mask >> i) & 1) prod = prod.multiply(gens[i]);
      }
      out.push_back(prod);
    }
    return out;
  };
  const auto stab_zero = state_stabilizer('0');
  const auto stab_plus = state_stabilizer('+');

  auto support_subset = [](const PauliOperator& p, const BitVector& columns) {
    BitVector raw = p.x_bits();
    raw |= p.z_bits();
    BitVector masked = raw;
    masked &= columns;
    return masked == raw;
  };

  for (std::size_t loc = 0; loc < gadget.circuit.locations.size(); ++loc) {
    // Is this location inside an ancilla preparation span?
    const Gadget::Mark* mark = nullptr;
    for (const auto& m : gadget.marks) {
      if (loc >= m.begin && loc < m.end) {
        mark = &m;
        break;
      }
    }
    for (const auto& fault : fault_alphabet(gadget.circuit, loc)) {
      FaultPattern pattern;
      pattern.faults.push_back({loc, fault});
      const auto result = propagate(gadget.circuit, gadget.rules, pattern);
      if (result.rejected) {
        ++report.rejected;
        continue;
      }
      ++report.patterns_checked;

      // Candidate column sets.
      std::vector<BitVector> column_sets;
      if (mark) {
        // Truncate at the end of the prep span to see what it delivered.
        Circuit prefix;
        prefix.n_qubits = gadget.circuit.n_qubits;
        prefix.locations.assign(gadget.circuit.locations.begin(),
                                gadget.circuit.locations.begin() +
                                    static_cast<std::ptrdiff_t>(mark->end));
        std::vector<ClassicalRule> rules;
        for (const auto& r : gadget.rules) {
          if (r.after_location < mark->end) rules.push_back(r);
        }
        const auto mid = propagate(prefix, rules, pattern);
        const PauliOperator delivered = mid.frame.restrict_to(mark->block);
        const auto& stab = mark->label == "prep0" ? stab_zero : stab_plus;
        std::size_t best = delivered.weight();
        for (const auto& m : stab) best = std::min(best, delivered.multiply(m).weight());
        for (const auto& m : stab) {
          const auto reduced = delivered.multiply(m);
          if (reduced.weight() != best) continue;
          BitVector cols = reduced.x_bits();
          cols |= reduced.z_bits();
          column_sets.push_back(std::move(cols));
        }
      } else {
        BitVector cols(n);
        for (std::size_t q = 0; q < gadget.circuit.n_qubits; ++q) {
          if ((fault.x_bit(q) || fault.z_bit(q)) &&
              gadget.circuit.block_map[q].block != static_cast<std::size_t>(-1)) {
            cols.set(gadget.circuit.block_map[q].position, true);
          }
        }
        column_sets.push_back(std::move(cols));
      }

      const auto out = result.frame.restrict_to(gadget.output_blocks[0]);
      bool ok = false;
      for (const auto& columns : column_sets) {
        for (const auto& w : normalizer) {
          if (support_subset(out.multiply(w), columns)) {
            ok = true;
            break;
          }
        }
        if (ok) break;
      }
      if (!ok && report.violations.size() < max_violations) {
        report.violations.push_back("support claim violated at " + pattern.to_string() +
                                    " out " + out.to_string());
      }
    }
  }
  return report;
}

}  // namespace stabkit
