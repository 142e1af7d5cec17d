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

#include "stabkit/exrec.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace stabkit {

std::vector<LocationSpan> FTProtocol::exrec_spans(std::size_t exrec_index,
                                                  const std::vector<bool>& trailing_kept) const {
  const ExRec& ex = exrecs[exrec_index];
  std::vector<LocationSpan> spans;
  for (auto ec : ex.leading_ecs) spans.push_back(ec_spans[ec]);
  spans.push_back(ex.gadget_span);
  for (std::size_t i = 0; i < ex.trailing_ecs.size(); ++i) {
    if (trailing_kept.empty() || trailing_kept[i]) spans.push_back(ec_spans[ex.trailing_ecs[i]]);
  }
  return spans;
}

FTProtocol build_protocol(const Circuit& original, const StabilizerCode& code) {
  FTProtocol protocol;
  protocol.code = &code;
  protocol.original = original;

  GadgetContext ctx(code);
  std::vector<std::vector<std::size_t>> block_of(original.n_qubits);
  // Last original location per logical qubit, and whether an EC has been
  // placed after it yet.
  std::vector<std::optional<std::size_t>> last_loc(original.n_qubits);
  // EC instance id -> (predecessor original location).
  std::vector<std::size_t> ec_pred;

  protocol.exrecs.resize(original.locations.size());

  auto ensure_ec_before = [&](std::size_t logical_qubit, std::size_t consumer_loc) {
    if (!last_loc[logical_qubit]) {
      throw std::invalid_argument("logical qubit used before preparation");
    }
    const std::size_t ec_id = protocol.ec_spans.size();
    const auto span = ctx.append_steane_ec(block_of[logical_qubit]);
    protocol.ec_spans.push_back({span.begin, span.end});
    ec_pred.push_back(*last_loc[logical_qubit]);
    protocol.exrecs[*last_loc[logical_qubit]].trailing_ecs.push_back(ec_id);
    protocol.exrecs[consumer_loc].leading_ecs.push_back(ec_id);
  };

  for (std::size_t i = 0; i < original.locations.size(); ++i) {
    const Location& loc = original.locations[i];
    ExRec& ex = protocol.exrecs[i];
    ex.original_location = i;

    switch (loc.kind) {
      case Location::Kind::kPrep: {
        ex.kind = ExRec::Kind::kPrep;
        block_of[loc.q0] = ctx.alloc_block();
        const auto span = ctx.append_verified_prep(block_of[loc.q0], loc.prep_basis);
        ex.gadget_span = {span.begin, span.end};
        break;
      }
      case Location::Kind::kMeasure: {
        ex.kind = ExRec::Kind::kMeas;
        const auto qubits = loc.qubits();
        if (qubits.size() != 1 || loc.measured.letter(qubits[0]) != 'Z') {
          throw std::invalid_argument("protocol measurements must be single-qubit Z");
        }
        ensure_ec_before(qubits[0], i);
        const auto span = ctx.append_logical_measure_z(block_of[qubits[0]]);
        ex.gadget_span = {span.begin, span.end};
        last_loc[qubits[0]].reset();
        break;
      }
      case Location::Kind::kCnot: {
        ex.kind = ExRec::Kind::kGate;
        ensure_ec_before(loc.q0, i);
        ensure_ec_before(loc.q1, i);
        const auto span = ctx.append_transversal_cnot(block_of[loc.q0], block_of[loc.q1]);
        ex.gadget_span = {span.begin, span.end};
        break;
      }
      case Location::Kind::kH: {
        ex.kind = ExRec::Kind::kGate;
        ensure_ec_before(loc.q0, i);
        const auto span = ctx.append_transversal_h(block_of[loc.q0]);
        ex.gadget_span = {span.begin, span.end};
        break;
      }
      case Location::Kind::kP:
      case Location::Kind::kPDag: {
        ex.kind = ExRec::Kind::kGate;
        ensure_ec_before(loc.q0, i);
        const auto span = ctx.append_transversal_p_logical(block_of[loc.q0]);
        ex.gadget_span = {span.begin, span.end};
        break;
      }
      case Location::Kind::kX:
      case Location::Kind::kY:
      case Location::Kind::kZ: {
        ex.kind = ExRec::Kind::kGate;
        ensure_ec_before(loc.q0, i);
        const char kind = loc.kind == Location::Kind::kX   ? 'X'
                          : loc.kind == Location::Kind::kY ? 'Y'
                                                           : 'Z';
        PauliOperator rep = kind == 'X'   ? code.logical_x()[0]
                            : kind == 'Z' ? code.logical_z()[0]
                                          : code.logical_x()[0].multiply(code.logical_z()[0]);
        const auto span = ctx.append_logical_pauli(block_of[loc.q0], rep);
        ex.gadget_span = {span.begin, span.end};
        break;
      }
      case Location::Kind::kWait: {
        ex.kind = ExRec::Kind::kWait;
        ensure_ec_before(loc.q0, i);
        const auto span = ctx.append_wait_all(block_of[loc.q0]);
        ex.gadget_span = {span.begin, span.end};
        break;
      }
      case Location::Kind::kT:
      case Location::Kind::kTDag:
        throw std::invalid_argument("protocols are Clifford-only in this release");
    }

    for (auto q : loc.qubits()) {
      if (loc.kind != Location::Kind::kMeasure) last_loc[q] = i;
    }
  }

  std::vector<std::vector<std::size_t>> inputs, outputs;
  for (std::size_t q = 0; q < original.n_qubits; ++q) {
    if (!block_of[q].empty()) outputs.push_back(block_of[q]);
  }
  protocol.data_blocks = block_of;
  protocol.encoded = ctx.finish("protocol", std::move(inputs), std::move(outputs));
  return protocol;
}

std::vector<ExRecClassification> classify_exrecs(const FTProtocol& protocol,
                                                 const FaultPattern& faults, std::size_t t) {
  const std::size_t n = protocol.exrecs.size();
  std::vector<ExRecClassification> out(n);

  auto count_in = [&](const std::vector<LocationSpan>& spans) {
    std::size_t c = 0;
    for (const auto& f : faults.faults) {
      for (const auto& span : spans) {
        if (span.contains(f.location)) {
          ++c;
          break;
        }
      }
    }
    return c;
  };

  // Which ExRec uses a given EC as leading.
  std::vector<std::size_t> leading_user(protocol.ec_spans.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto ec : protocol.exrecs[i].leading_ecs) leading_user[ec] = i;
  }

  // Back to front: truncate a trailing EC when its consumer ExRec is bad.
  for (std::size_t idx = n; idx-- > 0;) {
    const ExRec& ex = protocol.exrecs[idx];
    std::vector<bool> kept(ex.trailing_ecs.size(), true);
    bool truncated = false;
    for (std::size_t j = 0; j < ex.trailing_ecs.size(); ++j) {
      const std::size_t user = leading_user[ex.trailing_ecs[j]];
      if (user < n && !out[user].good) {
        kept[j] = false;
        truncated = true;
      }
    }
    const auto spans = protocol.exrec_spans(idx, kept);
    out[idx].fault_count = count_in(spans);
    out[idx].truncated = truncated;
    out[idx].good = out[idx].fault_count <= t;
  }
  return out;
}

namespace {

ExRecHarness make_exrec_harness(const StabilizerCode& code, const std::string& gate) {
  GadgetContext ctx(code);
  const bool two_blocks = gate == "CNOT";
  auto a = ctx.alloc_block();
  std::vector<std::size_t> b;
  if (two_blocks) b = ctx.alloc_block();

  ctx.append_steane_ec(a);
  if (two_blocks) ctx.append_steane_ec(b);
  const std::size_t leading_end = ctx.location_count();

  if (gate == "CNOT") {
    ctx.append_transversal_cnot(a, b);
  } else if (gate == "H") {
    ctx.append_transversal_h(a);
  } else if (gate == "P") {
    ctx.append_transversal_p_logical(a);
  } else if (gate == "X") {
    ctx.append_logical_pauli(a, code.logical_x()[0]);
  } else if (gate == "Z") {
    ctx.append_logical_pauli(a, code.logical_z()[0]);
  } else if (gate == "WAIT") {
    ctx.append_wait_all(a);
  } else {
    throw std::invalid_argument("unsupported exrec gate: " + gate);
  }

  ctx.append_steane_ec(a);
  if (two_blocks) ctx.append_steane_ec(b);

  std::vector<std::vector<std::size_t>> blocks{a};
  if (two_blocks) blocks.push_back(b);
  ExRecHarness harness;
  harness.full = ctx.finish("exrec-" + gate, blocks, blocks);
  harness.leading_end = leading_end;
  harness.ideal_gate = gate;
  harness.leading_circuit.n_qubits = harness.full.circuit.n_qubits;
  harness.leading_circuit.locations.assign(
      harness.full.circuit.locations.begin(),
      harness.full.circuit.locations.begin() + static_cast<std::ptrdiff_t>(leading_end));
  for (const auto& r : harness.full.rules) {
    if (r.after_location < leading_end) harness.leading_rules.push_back(r);
  }
  harness.decoder = std::make_shared<const FrameDecoder>(code);
  return harness;
}

}  // namespace

ExRecHarness make_cnot_exrec(const StabilizerCode& code) { return make_exrec_harness(code, "CNOT"); }

ExRecHarness make_gate_exrec(const StabilizerCode& code, const std::string& gate) {
  return make_exrec_harness(code, gate);
}

bool exrec_correct(const ExRecHarness& harness, const FaultPattern& faults,
                   const std::vector<PauliOperator>& inputs, bool* rejected) {
  const Gadget& g = harness.full;
  const FrameDecoder& dec = *harness.decoder;
  if (rejected) *rejected = false;

  PauliFrame seed(g.circuit.n_qubits);
  for (std::size_t b = 0; b < inputs.size(); ++b) {
    BitVector x(g.circuit.n_qubits), z(g.circuit.n_qubits);
    for (std::size_t i = 0; i < g.input_blocks[b].size(); ++i) {
      if (inputs[b].x_bit(i)) x.set(g.input_blocks[b][i], true);
      if (inputs[b].z_bit(i)) z.set(g.input_blocks[b][i], true);
    }
    seed.multiply(PauliOperator::from_xz(g.circuit.n_qubits, std::move(x), std::move(z)));
  }

  const FrameResult full = propagate(g.circuit, g.rules, faults, seed);
  if (full.rejected) {
    if (rejected) *rejected = true;
    return true;
  }

  // Reference: decode right after the leading ECs, then the ideal gate.
  const FrameResult lead = propagate(harness.leading_circuit, harness.leading_rules, faults, seed);
  if (lead.rejected) {
    if (rejected) *rejected = true;
    return true;
  }

  std::vector<FrameDecoder::Decoded> expect;
  for (const auto& block : g.input_blocks) {
    expect.push_back(dec.decode(lead.frame.restrict_to(block)));
  }
  if (harness.ideal_gate == "H") {
    std::swap(expect[0].x_class, expect[0].z_class);
  } else if (harness.ideal_gate == "P") {
    expect[0].z_class ^= expect[0].x_class;
  } else if (harness.ideal_gate == "CNOT") {
    expect[1].x_class ^= expect[0].x_class;
    expect[0].z_class ^= expect[1].z_class;
  }

  for (std::size_t b = 0; b < g.output_blocks.size(); ++b) {
    if (!(dec.decode(full.frame.restrict_to(g.output_blocks[b])) == expect[b])) return false;
  }
  return true;
}

ExRecCheckReport check_exrec_single_faults(const ExRecHarness& harness, std::size_t input_weight,
                                           std::size_t jobs) {
  ExRecCheckReport report;
  const Gadget& g = harness.full;
  const std::size_t L = g.circuit.locations.size();
  const std::size_t n = g.code->num_qubits();

  std::vector<PauliOperator> per_block;
  per_block.push_back(PauliOperator(n));
  for (std::size_t w = 1; w <= input_weight; ++w) {
    for_each_pauli_of_weight(n, w, [&](const PauliOperator& p) {
      per_block.push_back(p);
      return true;
    });
  }
  std::uint64_t input_combos = 1;
  for (std::size_t b = 0; b < g.input_blocks.size(); ++b) input_combos *= per_block.size();

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> patterns{0}, cases{0}, rejected{0}, failures{0};
  std::mutex mu;
  std::size_t best = static_cast<std::size_t>(-1);
  FaultPattern best_pattern;

  auto worker = [&]() {
    for (;;) {
      const std::size_t loc = next.fetch_add(1);
      if (loc > L) break;  // index L encodes the no-fault pattern
      std::vector<FaultPattern> patterns_here;
      if (loc == L) {
        patterns_here.push_back(FaultPattern{});
      } else {
        for (const auto& fault : fault_alphabet(g.circuit, loc)) {
          FaultPattern p;
          p.faults.push_back({loc, fault});
          patterns_here.push_back(std::move(p));
        }
      }
      for (const auto& pattern : patterns_here) {
        ++patterns;
        for (std::uint64_t idx = 0; idx < input_combos; ++idx) {
          std::vector<PauliOperator> inputs;
          std::uint64_t rest = idx;
          for (std::size_t b = 0; b < g.input_blocks.size(); ++b) {
            inputs.push_back(per_block[rest % per_block.size()]);
            rest /= per_block.size();
          }
          ++cases;
          bool was_rejected = false;
          if (!exrec_correct(harness, pattern, inputs, &was_rejected)) {
            ++failures;
            std::lock_guard<std::mutex> lock(mu);
            if (loc < best) {
              best = loc;
              best_pattern = pattern;
            }
          }
          if (was_rejected) ++rejected;
        }
      }
    }
  };

  std::vector<std::thread> threads;
  for (std::size_t j = 0; j < std::max<std::size_t>(1, jobs); ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  report.patterns_checked = patterns;
  report.cases_checked = cases;
  report.rejected = rejected;
  report.failures = failures;
  if (failures > 0) {
    report.first_failure = best_pattern;
    report.detail = "exrec incorrect under " + best_pattern.to_string();
  }
  return report;
}

}  // namespace stabkit
