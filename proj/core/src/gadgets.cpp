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

#include "stabkit/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include "stabkit/registry.hpp"

namespace stabkit {

namespace {

// Minimum-weight word in span(rows of `space`) complement within
// candidates: here, min-weight codeword of `code` outside the row space,
// ties lexicographic. Used for pure-type CSS logical supports.
BitVector min_weight_outside(const ClassicalLinearCode& code, const GF2Matrix& space,
                             const BitVector* pair_with = nullptr) {
  const GF2Matrix gen = code.generator_matrix();
  const std::size_t k = gen.num_rows();
  BitVector best(code.length());
  bool found = false;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    BitVector word(code.length());
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) word ^= gen.row(i);
    }
    if (space.in_row_space(word)) continue;
    if (pair_with && !(word.dot(*pair_with))) continue;
    if (!found || word.popcount() < best.popcount() ||
        (word.popcount() == best.popcount() && word.lex_less(best))) {
      best = word;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no logical word outside the stabilizer span");
  return best;
}

}  // namespace

CssData make_css_data(const StabilizerCode& code) {
  if (!is_css(code)) throw std::invalid_argument(code.name() + " is not a CSS code");
  if (code.num_logical() != 1) {
    throw std::invalid_argument("CSS gadget constructions support k=1 codes only");
  }
  CssData d;
  d.code = &code;
  d.bit_code = css_bit_code(code);
  d.phase_code = css_phase_code(code);

  auto [x_rows, z_rows] = css_generator_split(code);
  d.x_stab_rows = GF2Matrix(0, code.num_qubits());
  for (auto i : x_rows) d.x_stab_rows.append_row(code.generator(i).x_bits());
  d.z_stab_rows = GF2Matrix(0, code.num_qubits());
  for (auto i : z_rows) d.z_stab_rows.append_row(code.generator(i).z_bits());

  // Pure-type logical supports: X from C1 outside dual(C2), Z from C2
  // outside dual(C1), paired to anticommute.
  d.x_logical = min_weight_outside(d.bit_code, d.x_stab_rows);
  d.z_logical = min_weight_outside(d.phase_code, d.z_stab_rows, &d.x_logical);
  return d;
}

GadgetContext::GadgetContext(const StabilizerCode& code) : code_(&code) {
  circuit_.n_qubits = 0;
}

const CssData& GadgetContext::css() {
  if (!css_) css_ = std::make_shared<const CssData>(make_css_data(*code_));
  return *css_;
}

std::vector<std::size_t> GadgetContext::alloc_block() {
  const std::size_t block_id = next_block_id_++;
  std::vector<std::size_t> block(code_->num_qubits());
  for (std::size_t i = 0; i < block.size(); ++i) {
    block[i] = alloc_qubit();
    circuit_.block_map[block[i]] = {block_id, i};
  }
  return block;
}

std::size_t GadgetContext::alloc_qubit() {
  circuit_.block_map.push_back({static_cast<std::size_t>(-1), 0});
  return circuit_.n_qubits++;
}

void GadgetContext::prep(std::size_t q, char basis) {
  Location loc;
  loc.kind = Location::Kind::kPrep;
  loc.q0 = q;
  loc.prep_basis = basis;
  circuit_.locations.push_back(loc);
}

void GadgetContext::h(std::size_t q) {
  Location loc;
  loc.kind = Location::Kind::kH;
  loc.q0 = q;
  circuit_.locations.push_back(loc);
}

void GadgetContext::p_dagger(std::size_t q) {
  Location loc;
  loc.kind = Location::Kind::kPDag;
  loc.q0 = q;
  circuit_.locations.push_back(loc);
}

void GadgetContext::p(std::size_t q) {
  Location loc;
  loc.kind = Location::Kind::kP;
  loc.q0 = q;
  circuit_.locations.push_back(loc);
}

void GadgetContext::cnot(std::size_t c, std::size_t t) {
  Location loc;
  loc.kind = Location::Kind::kCnot;
  loc.q0 = c;
  loc.q1 = t;
  circuit_.locations.push_back(loc);
}

void GadgetContext::pauli_gate(std::size_t q, char kind) {
  Location loc;
  loc.kind = kind == 'X' ? Location::Kind::kX
                         : (kind == 'Y' ? Location::Kind::kY : Location::Kind::kZ);
  loc.q0 = q;
  circuit_.locations.push_back(loc);
}

void GadgetContext::wait(std::size_t q) {
  Location loc;
  loc.kind = Location::Kind::kWait;
  loc.q0 = q;
  circuit_.locations.push_back(loc);
}

std::size_t GadgetContext::measure_z(std::size_t q) {
  Location loc;
  loc.kind = Location::Kind::kMeasure;
  loc.measured = PauliOperator(circuit_.n_qubits);  // placeholder, fixed in finish()
  loc.q0 = q;
  loc.prep_basis = 'Z';
  circuit_.locations.push_back(loc);
  return meas_count_++;
}

std::size_t GadgetContext::measure_x(std::size_t q) {
  Location loc;
  loc.kind = Location::Kind::kMeasure;
  loc.measured = PauliOperator(circuit_.n_qubits);
  loc.q0 = q;
  loc.prep_basis = 'X';
  circuit_.locations.push_back(loc);
  return meas_count_++;
}

void GadgetContext::begin_retry_segment() {
  // Close any open plain segment first.
  end_segment();
  open_segment_ = circuit_.locations.size();
}

void GadgetContext::end_segment() {
  if (open_segment_ == static_cast<std::size_t>(-1)) return;
  Segment seg;
  seg.begin = open_segment_;
  seg.end = circuit_.locations.size();
  seg.retry_on_reject = true;
  segments_.push_back(seg);
  open_segment_ = static_cast<std::size_t>(-1);
}

void GadgetContext::add_rule(std::function<void(FrameRun&)> fn) {
  ClassicalRule rule;
  rule.after_location = circuit_.locations.empty() ? 0 : circuit_.locations.size() - 1;
  rule.fn = std::move(fn);
  rules_.push_back(std::move(rule));
}

PauliOperator GadgetContext::embed(const BitVector& x_support, const BitVector& z_support,
                                   const std::vector<std::size_t>& block) const {
  BitVector x(circuit_.n_qubits), z(circuit_.n_qubits);
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i < x_support.size() && x_support.get(i)) x.set(block[i], true);
    if (i < z_support.size() && z_support.get(i)) z.set(block[i], true);
  }
  return PauliOperator::from_xz(circuit_.n_qubits, std::move(x), std::move(z));
}

GadgetContext::Span GadgetContext::append_css_encoder(const std::vector<std::size_t>& block,
                                                      char basis) {
  const Span span{location_count(), 0};
  const CssData& d = css();
  GF2Matrix span_rows = d.x_stab_rows;
  if (basis == '+') span_rows.append_row(d.x_logical);
  const auto echelon = span_rows.reduced_echelon();

  std::vector<bool> is_pivot(code_->num_qubits(), false);
  for (auto pcol : echelon.pivots) is_pivot[pcol] = true;
  for (std::size_t q = 0; q < code_->num_qubits(); ++q) {
    prep(block[q], is_pivot[q] ? '+' : '0');
  }
  for (std::size_t r = 0; r < echelon.rows.size(); ++r) {
    const std::size_t pivot = echelon.pivots[r];
    for (std::size_t c = 0; c < code_->num_qubits(); ++c) {
      if (c != pivot && echelon.rows[r].get(c)) cnot(block[pivot], block[c]);
    }
  }
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_verified_prep(const std::vector<std::size_t>& block,
                                                        char basis) {
  const Span span{location_count(), 0};
  const std::size_t mark_index = marks_.size();
  marks_.push_back({std::string("prep") + basis, span.begin, 0, block});
  const CssData& d = css();
  const std::size_t n = code_->num_qubits();

  begin_retry_segment();
  append_css_encoder(block, basis);
  const auto copy = alloc_block();
  append_css_encoder(copy, basis);

  std::size_t first_meas = 0;
  if (basis == '0') {
    // Copy X errors (and a logical X flip) onto the comparison block; its
    // Z-basis word must stay inside dual(C2).
    for (std::size_t i = 0; i < n; ++i) cnot(block[i], copy[i]);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = measure_z(copy[i]);
      if (i == 0) first_meas = m;
    }
    const GF2Matrix accept_space = d.x_stab_rows;
    add_rule([first_meas, n, accept_space](FrameRun& run) {
      if (!accept_space.in_row_space(run.flips_window(first_meas, n))) run.reject();
    });
  } else {
    // Copy Z errors (and a logical Z flip) onto the comparison block; its
    // X-basis word must stay inside dual(C1).
    for (std::size_t i = 0; i < n; ++i) cnot(copy[i], block[i]);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = measure_x(copy[i]);
      if (i == 0) first_meas = m;
    }
    const GF2Matrix accept_space = d.z_stab_rows;
    add_rule([first_meas, n, accept_space](FrameRun& run) {
      if (!accept_space.in_row_space(run.flips_window(first_meas, n))) run.reject();
    });
  }
  end_segment();
  marks_[mark_index].end = location_count();
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_steane_ec(const std::vector<std::size_t>& data) {
  const Span span{location_count(), 0};
  const CssData& d = css();
  const std::size_t n = code_->num_qubits();

  const auto anc_plus = alloc_block();  // |0bar> + |1bar>, bit-flip readout
  const auto anc_zero = alloc_block();  // |0bar>, phase readout
  append_verified_prep(anc_plus, '+');
  append_verified_prep(anc_zero, '0');

  // Phase coupling first, then bit coupling, as in the EC figure.
  for (std::size_t i = 0; i < n; ++i) cnot(anc_zero[i], data[i]);
  for (std::size_t i = 0; i < n; ++i) cnot(data[i], anc_plus[i]);

  std::size_t phase_meas = 0, bit_meas = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = measure_x(anc_zero[i]);
    if (i == 0) phase_meas = m;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = measure_z(anc_plus[i]);
    if (i == 0) bit_meas = m;
  }

  const ClassicalLinearCode phase_code = d.phase_code;
  const ClassicalLinearCode bit_code = d.bit_code;
  const std::vector<std::size_t> data_copy = data;
  add_rule([phase_meas, bit_meas, n, phase_code, bit_code, data_copy](FrameRun& run) {
    const BitVector f_phase = run.flips_window(phase_meas, n);
    const BitVector d_phase = phase_code.decode_word(f_phase);
    const BitVector f_bit = run.flips_window(bit_meas, n);
    const BitVector d_bit = bit_code.decode_word(f_bit);
    BitVector x(run.width()), z(run.width());
    for (std::size_t i = 0; i < n; ++i) {
      if (d_bit.get(i)) x.set(data_copy[i], true);
      if (d_phase.get(i)) z.set(data_copy[i], true);
    }
    run.apply(PauliOperator::from_xz(run.width(), std::move(x), std::move(z)));
  });
  return {span.begin, location_count()};
}

namespace {

// One verified cat state: chain entangle, then compare the two ends
// through a fresh ancilla.
void append_cat(GadgetContext& ctx, const std::vector<std::size_t>& cat) {
  ctx.prep(cat[0], '+');
  for (std::size_t i = 1; i < cat.size(); ++i) ctx.prep(cat[i], '0');
  for (std::size_t i = 0; i + 1 < cat.size(); ++i) ctx.cnot(cat[i], cat[i + 1]);
  if (cat.size() >= 2) {
    const std::size_t anc = ctx.alloc_qubit();
    ctx.prep(anc, '0');
    ctx.cnot(cat.front(), anc);
    ctx.cnot(cat.back(), anc);
    const std::size_t m = ctx.measure_z(anc);
    ctx.add_rule([m](FrameRun& run) {
      if (run.flip(m)) run.reject();
    });
  }
}

}  // namespace

GadgetContext::Span GadgetContext::append_shor_ec(const std::vector<std::size_t>& data,
                                                  std::size_t repetitions) {
  return append_shor_syndrome(data, code_->generators(),
                              std::make_shared<const SyndromeDecoder>(*code_), repetitions,
                              /*random_reference=*/false);
}

GadgetContext::Span GadgetContext::append_shor_syndrome(
    const std::vector<std::size_t>& data, const std::vector<PauliOperator>& generators,
    std::shared_ptr<const SyndromeDecoder> decoder, std::size_t repetitions,
    bool random_reference) {
  const Span span{location_count(), 0};
  const std::size_t a = generators.size();

  // flip index of each cat readout: windows[rep][gen] = (first, count).
  auto windows = std::make_shared<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>>();
  windows->resize(repetitions);

  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    (*windows)[rep].resize(a);
    for (std::size_t g = 0; g < a; ++g) {
      const PauliOperator& gen = generators[g];
      std::vector<std::size_t> support;
      for (std::size_t q = 0; q < gen.num_qubits(); ++q) {
        if (gen.x_bit(q) || gen.z_bit(q)) support.push_back(q);
      }
      std::vector<std::size_t> cat(support.size());
      for (auto& q : cat) q = alloc_qubit();

      begin_retry_segment();
      append_cat(*this, cat);
      end_segment();

      // Couple controlled-(letter) from cat qubit j onto the data qubit.
      for (std::size_t j = 0; j < support.size(); ++j) {
        const std::size_t dq = data[support[j]];
        switch (gen.letter(support[j])) {
          case 'X':
            cnot(cat[j], dq);
            break;
          case 'Z':
            h(dq);
            cnot(cat[j], dq);
            h(dq);
            break;
          case 'Y':
            p_dagger(dq);
            cnot(cat[j], dq);
            p(dq);
            break;
          default:
            break;
        }
      }
      std::size_t first = 0;
      for (std::size_t j = 0; j < cat.size(); ++j) {
        const std::size_t m = measure_x(cat[j]);
        if (j == 0) first = m;
      }
      (*windows)[rep][g] = {first, cat.size()};
    }
  }

  std::vector<bool> is_random(a, false);
  if (random_reference) {
    for (std::size_t g = 0; g < a; ++g) {
      is_random[g] = generators[g].x_bits().any();
      if (is_random[g]) random_reference_bits_.push_back(g);
    }
  }
  const std::vector<std::size_t> data_copy = data;
  add_rule([windows, decoder, data_copy, a, repetitions, is_random](FrameRun& run) {
    // Per-round syndromes; each bit is the parity of one cat readout,
    // offset by the reference outcome where that is random. The consensus
    // is the first pair of consecutive agreeing rounds (falling back to the
    // last round). A per-bit majority is not enough: a data error landing
    // mid-extraction splits the rounds into before/after views and the
    // bitwise majority can match neither, miscorrecting under a single
    // fault. Consecutive agreement pins either the pre-fault or post-fault
    // syndrome, both of which are safe at t=1.
    std::vector<BitVector> rounds(repetitions, BitVector(a));
    BitVector reference(a);
    for (std::size_t g = 0; g < a; ++g) {
      const bool ref = is_random[g] && run.reference_bit(g);
      reference.set(g, ref);
      for (std::size_t rep = 0; rep < repetitions; ++rep) {
        const auto [first, count] = (*windows)[rep][g];
        bool parity = ref;
        for (std::size_t j = 0; j < count; ++j) parity ^= run.flip(first + j);
        rounds[rep].set(g, parity);
      }
    }
    BitVector consensus = rounds.back();
    for (std::size_t rep = 0; rep + 1 < repetitions; ++rep) {
      if (rounds[rep] == rounds[rep + 1]) {
        consensus = rounds[rep];
        break;
      }
    }
    // Correction difference: the faulty-run decode times the reference
    // decode (the latter is the identity when all references are fixed).
    PauliOperator diff = decoder->decode(consensus);
    if (reference.any()) diff = diff.multiply(decoder->decode(reference));
    BitVector x(run.width()), z(run.width());
    for (std::size_t i = 0; i < diff.num_qubits(); ++i) {
      if (diff.x_bit(i)) x.set(data_copy[i], true);
      if (diff.z_bit(i)) z.set(data_copy[i], true);
    }
    run.apply(PauliOperator::from_xz(run.width(), std::move(x), std::move(z)));
  });
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_knill_ec(std::vector<std::size_t>& data) {
  const Span span{location_count(), 0};
  const CssData& d = css();
  const std::size_t n = code_->num_qubits();
  if (!(d.bit_code.parity_check() == d.phase_code.parity_check())) {
    throw std::invalid_argument("knill_ec v1 requires matching X/Z check matrices");
  }

  const auto bridge = alloc_block();  // |0bar>+|1bar>, Bell half measured
  const auto fresh = alloc_block();   // |0bar>, the teleport target
  append_verified_prep(bridge, '+');
  append_verified_prep(fresh, '0');
  for (std::size_t i = 0; i < n; ++i) cnot(bridge[i], fresh[i]);  // logical Bell pair

  for (std::size_t i = 0; i < n; ++i) cnot(data[i], bridge[i]);
  for (std::size_t i = 0; i < n; ++i) h(data[i]);

  std::size_t meas_d = 0, meas_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = measure_z(data[i]);
    if (i == 0) meas_d = m;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = measure_z(bridge[i]);
    if (i == 0) meas_b = m;
  }

  const ClassicalLinearCode bit_code = d.bit_code;
  const BitVector z_log = d.z_logical;
  const BitVector x_log = d.x_logical;
  const std::vector<std::size_t> out_block = fresh;
  add_rule([meas_d, meas_b, n, bit_code, z_log, x_log, out_block](FrameRun& run) {
    auto logical_flip = [&](std::size_t first) {
      BitVector f = run.flips_window(first, n);
      f ^= bit_code.decode_word(f);
      return f.dot(z_log);
    };
    const bool delta_a = logical_flip(meas_d);  // through the Hadamard leg
    const bool delta_b = logical_flip(meas_b);
    BitVector x(run.width()), z(run.width());
    for (std::size_t i = 0; i < n; ++i) {
      if (delta_b && x_log.get(i)) x.set(out_block[i], true);
      if (delta_a && z_log.get(i)) z.set(out_block[i], true);
    }
    run.apply(PauliOperator::from_xz(run.width(), std::move(x), std::move(z)));
  });

  data = fresh;
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_transversal_cnot(
    const std::vector<std::size_t>& control, const std::vector<std::size_t>& target) {
  const Span span{location_count(), 0};
  for (std::size_t i = 0; i < control.size(); ++i) cnot(control[i], target[i]);
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_transversal_h(const std::vector<std::size_t>& block) {
  const Span span{location_count(), 0};
  if (!has_transversal_h_p(*code_)) {
    throw std::invalid_argument(code_->name() + " has no registered transversal H");
  }
  for (auto q : block) h(q);
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_transversal_p_logical(
    const std::vector<std::size_t>& block) {
  const Span span{location_count(), 0};
  if (!has_transversal_h_p(*code_)) {
    throw std::invalid_argument(code_->name() + " has no registered transversal P");
  }
  // Logical P is P-dagger on every physical qubit for this code family.
  for (auto q : block) p_dagger(q);
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_logical_pauli(const std::vector<std::size_t>& block,
                                                        const PauliOperator& rep) {
  const Span span{location_count(), 0};
  for (std::size_t i = 0; i < rep.num_qubits(); ++i) {
    const char c = rep.letter(i);
    if (c != 'I') pauli_gate(block[i], c);
  }
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_wait_all(const std::vector<std::size_t>& block) {
  const Span span{location_count(), 0};
  for (auto q : block) wait(q);
  return {span.begin, location_count()};
}

GadgetContext::Span GadgetContext::append_logical_measure_z(const std::vector<std::size_t>& data) {
  const Span span{location_count(), 0};
  const CssData& d = css();
  const std::size_t n = code_->num_qubits();
  std::size_t first = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = measure_z(data[i]);
    if (i == 0) first = m;
  }
  const ClassicalLinearCode bit_code = d.bit_code;
  const BitVector z_log = d.z_logical;
  add_rule([first, n, bit_code, z_log](FrameRun& run) {
    BitVector f = run.flips_window(first, n);
    f ^= bit_code.decode_word(f);
    run.emit_logical_flip(f.dot(z_log));
  });
  return {span.begin, location_count()};
}

Gadget GadgetContext::finish(std::string name, std::vector<std::vector<std::size_t>> inputs,
                             std::vector<std::vector<std::size_t>> outputs) {
  end_segment();
  // Measurement locations carry full-width weight-1 operators; they were
  // recorded before the final qubit count was known.
  for (auto& loc : circuit_.locations) {
    if (loc.kind == Location::Kind::kMeasure) {
      loc.measured =
          PauliOperator::single(circuit_.n_qubits, loc.q0, loc.prep_basis == 'X' ? 'X' : 'Z');
    }
  }
  Gadget g;
  g.name = std::move(name);
  g.code = code_;
  g.circuit = std::move(circuit_);
  g.input_blocks = std::move(inputs);
  g.output_blocks = std::move(outputs);
  g.rules = std::move(rules_);
  g.segments = std::move(segments_);
  g.random_reference_bits = std::move(random_reference_bits_);
  g.marks = std::move(marks_);
  return g;
}

Gadget transversal_gate(const StabilizerCode& code, const std::string& logical) {
  GadgetContext ctx(code);
  if (logical == "CNOT") {
    if (!is_css(code)) throw std::invalid_argument("transversal CNOT requires a CSS code");
    auto a = ctx.alloc_block();
    auto b = ctx.alloc_block();
    ctx.append_transversal_cnot(a, b);
    return ctx.finish("transversal-cnot", {a, b}, {a, b});
  }
  auto block = ctx.alloc_block();
  if (logical == "H") {
    ctx.append_transversal_h(block);
    return ctx.finish("transversal-h", {block}, {block});
  }
  if (logical == "P") {
    ctx.append_transversal_p_logical(block);
    return ctx.finish("transversal-p", {block}, {block});
  }
  if (logical == "X" || logical == "Z") {
    if (!code.has_logicals()) throw std::invalid_argument("code has no logical representatives");
    const PauliOperator& rep = logical == "X" ? code.logical_x()[0] : code.logical_z()[0];
    ctx.append_logical_pauli(block, rep);
    return ctx.finish("logical-" + logical, {block}, {block});
  }
  throw std::invalid_argument("unsupported transversal gate: " + logical);
}

Gadget cat_state_circuit(std::size_t m) {
  if (m < 2) throw std::invalid_argument("cat states need at least 2 qubits");
  const StabilizerCode dummy = trivial_code(1);
  GadgetContext ctx(dummy);
  std::vector<std::size_t> cat(m);
  for (auto& q : cat) q = ctx.alloc_qubit();
  ctx.begin_retry_segment();
  append_cat(ctx, cat);
  ctx.end_segment();
  return ctx.finish("cat-" + std::to_string(m), {}, {cat});
}

Gadget shor_ec(const StabilizerCode& code, std::size_t repetitions) {
  if (repetitions < 1) throw std::invalid_argument("need at least one repetition");
  GadgetContext ctx(code);
  auto data = ctx.alloc_block();
  ctx.append_shor_ec(data, repetitions);
  return ctx.finish("shor-ec", {data}, {data});
}

Gadget steane_ec(const StabilizerCode& code) {
  GadgetContext ctx(code);
  auto data = ctx.alloc_block();
  ctx.append_steane_ec(data);
  return ctx.finish("steane-ec", {data}, {data});
}

Gadget knill_ec(const StabilizerCode& code) {
  GadgetContext ctx(code);
  auto data = ctx.alloc_block();
  auto in_block = data;
  ctx.append_knill_ec(data);
  return ctx.finish("knill-ec", {in_block}, {data});
}

Gadget prep_logical(const StabilizerCode& code, char basis, PrepStrategy strategy) {
  GadgetContext ctx(code);
  auto block = ctx.alloc_block();
  if (strategy == PrepStrategy::kVerifyDiscard) {
    ctx.append_verified_prep(block, basis);
    return ctx.finish(std::string("prep-") + basis + "-verify", {}, {block});
  }

  // Shor-style projection: start in a product state and project onto the
  // stabilizer extended by the logical that pins the target state. The
  // consensus syndrome is corrected with a minimum-weight decode for the
  // extended (k=0) code. Reference outcomes of generators with X support
  // are genuinely random; the rule reads them from reference bit g.
  if (!code.has_logicals()) throw std::invalid_argument("code has no logical representatives");
  std::vector<PauliOperator> ext_gens = code.generators();
  ext_gens.push_back(basis == '0' ? code.logical_z()[0] : code.logical_x()[0]);
  {
    // Reference bits are only independent fair coins when the generators'
    // X parts are linearly independent; holds for the bundled codes.
    GF2Matrix xparts(0, code.num_qubits());
    std::size_t x_rows = 0;
    for (const auto& g : ext_gens) {
      if (g.x_bits().any()) {
        xparts.append_row(g.x_bits());
        ++x_rows;
      }
    }
    if (xparts.num_rows() > 0 && xparts.rank() != x_rows) {
      throw std::invalid_argument("shor_project needs independent generator X parts");
    }
  }
  const StabilizerCode extended(code.name() + "-proj", code.num_qubits(), ext_gens);
  auto decoder = std::make_shared<const SyndromeDecoder>(extended);

  for (auto q : block) ctx.prep(q, '0');
  ctx.append_shor_syndrome(block, ext_gens, std::move(decoder), 3, /*random_reference=*/true);
  return ctx.finish(std::string("prep-") + basis + "-project", {}, {block});
}

Gadget measure_logical_z(const StabilizerCode& code) {
  GadgetContext ctx(code);
  auto data = ctx.alloc_block();
  ctx.append_logical_measure_z(data);
  return ctx.finish("measure-z", {data}, {});
}

}  // namespace stabkit
