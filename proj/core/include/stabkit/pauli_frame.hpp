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

#ifndef STABKIT_PAULI_FRAME_HPP
#define STABKIT_PAULI_FRAME_HPP

#include <functional>
#include <string>
#include <vector>

#include "stabkit/circuit.hpp"
#include "stabkit/pauli.hpp"

namespace stabkit {

/// A set of injected faults: (location id, Pauli on the circuit width).
/// Convention: the fault acts after its location's operation, except at
/// measurement locations where it acts on the measured qubits just before
/// readout.
struct FaultPattern {
  struct Fault {
    std::size_t location = 0;
    PauliOperator error;
  };
  std::vector<Fault> faults;

  bool empty() const { return faults.empty(); }
  std::size_t size() const { return faults.size(); }
  std::string to_string() const;
};

/// The Pauli frame: the exact difference between the faulty execution and
/// the fault-free reference, tracked modulo global phase.
class PauliFrame {
 public:
  explicit PauliFrame(std::size_t n) : x_(n), z_(n) {}

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x_bits() const { return x_; }
  const BitVector& z_bits() const { return z_; }

  void clear_qubit(std::size_t q) {
    x_.set(q, false);
    z_.set(q, false);
  }

  void multiply(const PauliOperator& p) {
    x_ ^= p.x_bits();
    z_ ^= p.z_bits();
  }

  void apply_h(std::size_t q) {
    const bool a = x_.get(q), b = z_.get(q);
    x_.set(q, b);
    z_.set(q, a);
  }

  void apply_p(std::size_t q) {
    if (x_.get(q)) z_.flip(q);
  }

  void apply_cnot(std::size_t c, std::size_t t) {
    if (x_.get(c)) x_.flip(t);
    if (z_.get(t)) z_.flip(c);
  }

  /// Whether the frame anticommutes with a measured operator, i.e. whether
  /// the recorded outcome flips relative to the reference.
  bool flips_measurement(const PauliOperator& m) const {
    return x_.dot(m.z_bits()) ^ z_.dot(m.x_bits());
  }

  PauliOperator to_pauli() const { return PauliOperator::from_xz(x_.size(), x_, z_); }

  /// Restriction to a block's qubits, renumbered 0..len-1.
  PauliOperator restrict_to(const std::vector<std::size_t>& qubits) const;

  bool is_identity() const { return !x_.any() && !z_.any(); }

 private:
  BitVector x_;
  BitVector z_;
};

/// Mutable view handed to a gadget's classical rules during propagation.
class FrameRun {
 public:
  FrameRun(PauliFrame& frame, const std::vector<bool>& flips) : frame_(frame), flips_(flips) {}

  std::size_t width() const { return frame_.num_qubits(); }

  /// Outcome flip of the i-th measurement location executed so far.
  bool flip(std::size_t meas_index) const { return flips_.at(meas_index); }

  /// Reference-run outcome bits for gadgets whose fault-free outcomes are
  /// genuinely random (Shor-style projection onto a fresh stabilizer).
  /// Out-of-range reads return 0, which is exact for gadgets whose
  /// reference outcomes are deterministic.
  bool reference_bit(std::size_t i) const {
    return reference_bits_ && i < reference_bits_->size() && (*reference_bits_)[i];
  }
  void set_reference_bits(const std::vector<bool>* bits) { reference_bits_ = bits; }

  /// Flips [first, first+count) packed into a BitVector.
  BitVector flips_window(std::size_t first, std::size_t count) const;

  /// Applies the correction difference (faulty-run correction times the
  /// reference correction) to the frame.
  void apply(const PauliOperator& diff) { frame_.multiply(diff); }

  void reject() { rejected_ = true; }
  bool rejected() const { return rejected_; }

  /// Records one bit of logical readout flip (measurement gadgets).
  void emit_logical_flip(bool flip) { logical_flips_.push_back(flip); }
  const std::vector<bool>& logical_flips() const { return logical_flips_; }

 private:
  friend struct FrameEngine;
  PauliFrame& frame_;
  const std::vector<bool>& flips_;
  const std::vector<bool>* reference_bits_ = nullptr;
  bool rejected_ = false;
  std::vector<bool> logical_flips_;
};

/// A classical processing step anchored after a location index.
struct ClassicalRule {
  std::size_t after_location = 0;
  std::function<void(FrameRun&)> fn;
};

/// A contiguous run of locations that is retried from scratch when a rule
/// inside it rejects (ancilla verify-and-discard). Sampled (Monte Carlo)
/// propagation resamples faults per attempt; exhaustive propagation treats
/// rejection as a discarded pattern instead.
struct Segment {
  std::size_t begin = 0;  // location index, inclusive
  std::size_t end = 0;    // exclusive
  bool retry_on_reject = false;
};

struct FrameResult {
  PauliFrame frame{0};
  std::vector<bool> measurement_flips;
  std::vector<bool> logical_flips;
  bool rejected = false;
};

/// Propagates faults through a Clifford circuit with classical rules.
/// `input_frame` seeds the frame (residual errors on input blocks).
/// Throws for non-Clifford locations.
FrameResult propagate(const Circuit& circuit, const std::vector<ClassicalRule>& rules,
                      const FaultPattern& faults, const PauliFrame& input_frame,
                      const std::vector<bool>* reference_bits = nullptr);

FrameResult propagate(const Circuit& circuit, const std::vector<ClassicalRule>& rules,
                      const FaultPattern& faults);

/// All nontrivial Pauli assignments for a fault at the given location,
/// embedded at circuit width: 3 for single-qubit locations, 15 for CNOT,
/// and 3 per measured qubit... for weight-w measurements, 4^w - 1.
std::vector<PauliOperator> fault_alphabet(const Circuit& circuit, std::size_t location);

}  // namespace stabkit

#endif  // STABKIT_PAULI_FRAME_HPP
