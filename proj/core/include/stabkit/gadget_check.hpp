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

#ifndef STABKIT_GADGET_CHECK_HPP
#define STABKIT_GADGET_CHECK_HPP

#include <string>

#include "stabkit/gadgets.hpp"

namespace stabkit {

/// Ideal decoder / r-filter semantics for Pauli frames on one code block.
class FrameDecoder {
 public:
  explicit FrameDecoder(const StabilizerCode& code);

  const StabilizerCode& code() const { return *code_; }

  /// Distance of the frame from the code space: the weight of the
  /// minimum-weight Pauli with the same syndrome (the r-filter passes
  /// exactly when this is <= r; logical shifts count as distance 0).
  std::size_t filter_weight(const PauliOperator& block_frame) const;

  /// Logical Pauli class after perfect correction: bit i of x_class set
  /// when the corrected frame acts as logical X on qubit i (anticommutes
  /// with logical Z_i), and likewise for z_class.
  struct Decoded {
    BitVector x_class;
    BitVector z_class;
    bool operator==(const Decoded& o) const {
      return x_class == o.x_class && z_class == o.z_class;
    }
  };
  Decoded decode(const PauliOperator& block_frame) const;

  /// The star-decoder keeps the syndrome alongside the logical class.
  BitVector syndrome(const PauliOperator& block_frame) const;

  /// Whether the corrected frame fixes the prepared state: membership of
  /// the frame (after coset-leader correction) in the span of the
  /// stabilizer and the pinning logical ('0' pins logical Z, '+' logical X).
  bool fixes_prepared_state(const PauliOperator& block_frame, char basis) const;

 private:
  const StabilizerCode* code_;
  SyndromeDecoder decoder_;
  GF2Matrix stab_rows_;       // symplectic rows of the generators
  GF2Matrix stab_plus_z_;     // plus logical Z
  GF2Matrix stab_plus_x_;     // plus logical X
};

enum class GadgetProperty { kPrepA, kPrepB, kGateA, kGateB, kMeas, kEcA, kEcB };

const char* property_name(GadgetProperty p);
GadgetProperty property_from_name(const std::string& name);

struct GadgetCheckOptions {
  std::size_t fault_budget = 1;   // s: maximum faulty locations enumerated
  std::size_t input_weight = 1;   // r: maximum input residual weight per block
  std::size_t t = 1;              // errors the code corrects
  std::size_t jobs = 1;
  std::uint64_t pattern_cap = 1'000'000'000;  // propagation guard
  char prep_basis = '0';          // PrepB target
  std::string ideal_gate = "I";   // GateB logical action
};

struct GadgetCheckReport {
  std::string gadget;
  GadgetProperty property = GadgetProperty::kEcA;
  std::size_t fault_budget = 0;
  std::size_t input_weight = 0;
  std::size_t t = 1;
  bool passed = false;
  std::uint64_t patterns_checked = 0;
  std::uint64_t cases_checked = 0;  // (pattern, input, branch) triples
  std::uint64_t rejected = 0;       // discarded by verify-and-discard rules
  // Replayable counterexample, valid when !passed.
  FaultPattern counterexample;
  std::vector<PauliOperator> counterexample_inputs;  // block-local residuals
  std::vector<bool> counterexample_reference;
  std::string detail;
};

/// Exhaustively enumerates fault patterns with at most fault_budget faulty
/// locations (every Pauli assignment per location) times all input
/// residuals of weight <= input_weight per input block, and verifies the
/// property's diagram equation on every accepted case.
GadgetCheckReport check_property(const Gadget& gadget, GadgetProperty property,
                                 const GadgetCheckOptions& options);

/// The Steane EC support claim: for every accepted single-fault pattern on
/// a clean input, the output frame equals a normalizer element times an
/// error supported on the fault's columns. Faults inside an ancilla
/// preparation contribute the columns of the residual the prep delivers
/// (reduced over the prepared state's stabilizer); later faults contribute
/// the block positions they touch.
struct SupportClaimReport {
  std::uint64_t patterns_checked = 0;
  std::uint64_t rejected = 0;
  std::vector<std::string> violations;
};
SupportClaimReport check_steane_support_claim(const Gadget& gadget,
                                              std::size_t max_violations = 5);

}  // namespace stabkit

#endif  // STABKIT_GADGET_CHECK_HPP
