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

#ifndef STABKIT_GADGETS_HPP
#define STABKIT_GADGETS_HPP

#include <memory>
#include <string>
#include <vector>

#include "stabkit/classical_code.hpp"
#include "stabkit/css.hpp"
#include "stabkit/pauli_frame.hpp"
#include "stabkit/stabilizer_code.hpp"

namespace stabkit {

/// A fault-tolerant gadget: a Clifford circuit plus the classical decode /
/// correction / accept rules that complete it, and the block wiring needed
/// to state its contract.
struct Gadget {
  std::string name;
  const StabilizerCode* code = nullptr;
  Circuit circuit;
  std::vector<std::vector<std::size_t>> input_blocks;
  std::vector<std::vector<std::size_t>> output_blocks;
  std::vector<ClassicalRule> rules;
  std::vector<Segment> segments;
  /// Indices of reference bits the rules consume that are genuinely random
  /// (uniform fair coins); empty for gadgets with deterministic references.
  std::vector<std::size_t> random_reference_bits;

  /// Named location spans (ancilla preparations and the like) with the
  /// block each one delivers; lets callers reason about internal structure.
  struct Mark {
    std::string label;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::vector<std::size_t> block;
  };
  std::vector<Mark> marks;

  FrameResult run(const FaultPattern& faults, const PauliFrame& input) const {
    return propagate(circuit, rules, faults, input);
  }
  FrameResult run(const FaultPattern& faults) const {
    return propagate(circuit, rules, faults);
  }
};

/// Classical data shared by the CSS gadget constructions (k = 1 codes).
struct CssData {
  const StabilizerCode* code = nullptr;
  ClassicalLinearCode bit_code;    // C1, checks from the Z generators
  ClassicalLinearCode phase_code;  // C2, checks from the X generators
  GF2Matrix x_stab_rows;           // X generator supports (dual(C2) basis)
  GF2Matrix z_stab_rows;           // Z generator supports (dual(C1) basis)
  BitVector x_logical;             // pure-X logical support
  BitVector z_logical;             // pure-Z logical support
};

/// Builds the shared CSS data; throws for non-CSS codes or k != 1.
CssData make_css_data(const StabilizerCode& code);

/// Incrementally assembles an encoded circuit out of gadget pieces; used by
/// the standalone gadget constructors and by the ExRec builder.
class GadgetContext {
 public:
  explicit GadgetContext(const StabilizerCode& code);

  const StabilizerCode& code() const { return *code_; }
  const CssData& css();

  std::vector<std::size_t> alloc_block();
  std::size_t alloc_qubit();

  std::size_t location_count() const { return circuit_.locations.size(); }
  std::size_t measurement_count() const { return meas_count_; }

  struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
  };

  // Elementary appends.
  void prep(std::size_t q, char basis);
  void h(std::size_t q);
  void p_dagger(std::size_t q);
  void p(std::size_t q);
  void cnot(std::size_t c, std::size_t t);
  void pauli_gate(std::size_t q, char kind);
  void wait(std::size_t q);
  std::size_t measure_z(std::size_t q);  // returns measurement index
  std::size_t measure_x(std::size_t q);

  void begin_retry_segment();
  void end_segment();
  void add_rule(std::function<void(FrameRun&)> fn);

  // Non-fault-tolerant CSS encoder: |0bar> or |+bar> on the block.
  Span append_css_encoder(const std::vector<std::size_t>& block, char basis);

  // Verified preparation (encode, copy, compare, discard on mismatch).
  Span append_verified_prep(const std::vector<std::size_t>& block, char basis);

  // Steane error correction on a data block (CSS codes).
  Span append_steane_ec(const std::vector<std::size_t>& data);

  // Shor error correction with verified cat states and majority vote over
  // `repetitions` rounds; works for any stabilizer code.
  Span append_shor_ec(const std::vector<std::size_t>& data, std::size_t repetitions);

  // The general cat-state syndrome machinery: measures each listed
  // generator `repetitions` times, takes the per-bit majority, and applies
  // the decoder's coset leader. With random_reference, the reference
  // outcome of generator g is read from the run's reference bit g (needed
  // when projecting a product state onto a fresh stabilizer).
  Span append_shor_syndrome(const std::vector<std::size_t>& data,
                            const std::vector<PauliOperator>& generators,
                            std::shared_ptr<const SyndromeDecoder> decoder,
                            std::size_t repetitions, bool random_reference);

  // Knill error correction: teleports the block; `data` is updated to the
  // fresh output block.
  Span append_knill_ec(std::vector<std::size_t>& data);

  // Transversal gates.
  Span append_transversal_cnot(const std::vector<std::size_t>& control,
                               const std::vector<std::size_t>& target);
  Span append_transversal_h(const std::vector<std::size_t>& block);
  Span append_transversal_p_logical(const std::vector<std::size_t>& block);  // P-dagger per qubit
  Span append_logical_pauli(const std::vector<std::size_t>& block, const PauliOperator& rep);
  Span append_wait_all(const std::vector<std::size_t>& block);

  // Destructive logical Z measurement: transversal readout plus classical
  // decode; emits one logical flip bit.
  Span append_logical_measure_z(const std::vector<std::size_t>& data);

  Gadget finish(std::string name, std::vector<std::vector<std::size_t>> inputs,
                std::vector<std::vector<std::size_t>> outputs);

  // The raw pieces, for the ExRec assembler.
  Circuit& circuit() { return circuit_; }
  std::vector<ClassicalRule>& rules() { return rules_; }
  std::vector<Segment>& segments() { return segments_; }

 private:
  PauliOperator embed(const BitVector& x_support, const BitVector& z_support,
                      const std::vector<std::size_t>& block) const;

  const StabilizerCode* code_;
  std::shared_ptr<const CssData> css_;  // lazily built
  Circuit circuit_;
  std::vector<ClassicalRule> rules_;
  std::vector<Segment> segments_;
  std::size_t meas_count_ = 0;
  std::size_t open_segment_ = static_cast<std::size_t>(-1);
  std::size_t next_block_id_ = 0;
  std::vector<std::size_t> random_reference_bits_;
  std::vector<Gadget::Mark> marks_;
};

// Standalone gadgets per the module surface.

/// Transversal logical gate circuits. `logical` is one of "X", "Z", "H",
/// "P", "CNOT". H and P require the seven-qubit code in this release; CNOT
/// requires CSS; X/Z work for any code with logical representatives.
Gadget transversal_gate(const StabilizerCode& code, const std::string& logical);

/// Cat state |0..0>+|1..1> on m qubits: chain preparation plus an
/// end-to-end pair verification through a fresh ancilla. Accepting runs
/// with at most one fault leave at most one error (modulo the cat state's
/// own stabilizer).
Gadget cat_state_circuit(std::size_t m);

Gadget shor_ec(const StabilizerCode& code, std::size_t repetitions);
Gadget steane_ec(const StabilizerCode& code);
Gadget knill_ec(const StabilizerCode& code);

enum class PrepStrategy { kVerifyDiscard, kShorProject };

/// Fault-tolerant preparation of |0bar> or |+bar>.
Gadget prep_logical(const StabilizerCode& code, char basis, PrepStrategy strategy);

/// Destructive fault-tolerant logical Z measurement (CSS).
Gadget measure_logical_z(const StabilizerCode& code);

}  // namespace stabkit

#endif  // STABKIT_GADGETS_HPP
