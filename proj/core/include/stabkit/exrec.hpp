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

#ifndef STABKIT_EXREC_HPP
#define STABKIT_EXREC_HPP

#include <optional>

#include "stabkit/gadget_check.hpp"
#include "stabkit/gadgets.hpp"

namespace stabkit {

/// A location span in the encoded circuit.
struct LocationSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  bool contains(std::size_t loc) const { return loc >= begin && loc < end; }
  std::size_t size() const { return end - begin; }
};

/// An extended rectangle: one original location's gadget plus its leading
/// and trailing EC steps. Preparation ExRecs have no leading ECs and
/// measurement ExRecs no trailing ECs; adjacent ExRecs share EC instances.
struct ExRec {
  enum class Kind { kPrep, kGate, kMeas, kWait };
  Kind kind = Kind::kGate;
  std::size_t original_location = 0;
  LocationSpan gadget_span;
  std::vector<std::size_t> leading_ecs;   // EC instance ids
  std::vector<std::size_t> trailing_ecs;  // EC instance ids
};

/// A fault-tolerant protocol: the original (logical) circuit, the encoded
/// circuit with every location replaced by its gadget and EC gadgets
/// between consecutive locations, and the ExRec index covering every
/// original location exactly once.
struct FTProtocol {
  const StabilizerCode* code = nullptr;
  Circuit original;
  Gadget encoded;
  std::vector<ExRec> exrecs;             // one per original location, in order
  std::vector<LocationSpan> ec_spans;    // EC instance id -> span
  std::vector<std::vector<std::size_t>> data_blocks;  // logical qubit -> physical qubits

  /// Every location of the ExRec, honoring truncation flags per trailing EC.
  std::vector<LocationSpan> exrec_spans(std::size_t exrec_index,
                                        const std::vector<bool>& trailing_kept) const;
};

/// Builds the fault-tolerant protocol for a logical Clifford circuit over
/// a CSS code (Steane EC between consecutive locations, verify-discard
/// preparations, transversal gates, destructive logical measurement).
/// Supported original locations: PREP(0/+), H, P, X, Y, Z, CNOT, WAIT and
/// weight-1 Z/X measurements.
FTProtocol build_protocol(const Circuit& original, const StabilizerCode& code);

struct ExRecClassification {
  bool good = true;
  bool truncated = false;
  std::size_t fault_count = 0;  // within the (possibly truncated) ExRec
};

/// Recursive good/bad and full/truncated classification, back to front: a
/// trailing EC is dropped from an ExRec when it serves as a leading EC of a
/// bad successor.
std::vector<ExRecClassification> classify_exrecs(const FTProtocol& protocol,
                                                 const FaultPattern& faults, std::size_t t);

/// A standalone extended rectangle for exhaustive checks and Monte Carlo:
/// leading ECs, the gadget, trailing ECs, with input blocks open.
struct ExRecHarness {
  Gadget full;                  // the whole rectangle as one gadget
  std::size_t leading_end = 0;  // locations [0, leading_end) are the leading ECs
  std::string ideal_gate;       // logical action for the correctness check
  // Cached pieces for the correctness check's reference side.
  Circuit leading_circuit;
  std::vector<ClassicalRule> leading_rules;
  std::shared_ptr<const FrameDecoder> decoder;
};

/// CNOT ExRec with Steane EC (CSS code).
ExRecHarness make_cnot_exrec(const StabilizerCode& code);

/// Single-block gate ExRec ("H", "P", "X", "Z", "WAIT") with Steane EC.
ExRecHarness make_gate_exrec(const StabilizerCode& code, const std::string& gate);

/// Checks the ExRec correctness equation for one fault pattern and input
/// residuals (block-local, may be empty for clean inputs): decoding the
/// output of the full rectangle must equal decoding right after the leading
/// ECs followed by the ideal gate. Returns false when incorrect; rejected
/// runs (ancilla discards) return true and set *rejected.
bool exrec_correct(const ExRecHarness& harness, const FaultPattern& faults,
                   const std::vector<PauliOperator>& inputs, bool* rejected = nullptr);

struct ExRecCheckReport {
  std::uint64_t patterns_checked = 0;
  std::uint64_t cases_checked = 0;
  std::uint64_t rejected = 0;
  std::uint64_t failures = 0;
  FaultPattern first_failure;
  std::string detail;
};

/// Exhaustive single-fault (and optional weight<=r input) correctness sweep
/// over the whole rectangle: the machine check of "a good ExRec is
/// correct" at s <= 1.
ExRecCheckReport check_exrec_single_faults(const ExRecHarness& harness, std::size_t input_weight,
                                           std::size_t jobs);

}  // namespace stabkit

#endif  // STABKIT_EXREC_HPP
