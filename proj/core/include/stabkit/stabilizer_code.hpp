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

#ifndef STABKIT_STABILIZER_CODE_HPP
#define STABKIT_STABILIZER_CODE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stabkit/gf2_matrix.hpp"
#include "stabkit/pauli.hpp"

namespace stabkit {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One violated invariant found by validate(); violations are data, not
/// exceptions.
struct CodeViolation {
  enum class Kind {
    kLengthMismatch,
    kImaginaryPhase,
    kNonCommutingPair,
    kDependentGenerators,
    kMinusIdentityInSpan,
    kLogicalCount,
    kLogicalCommutation,
  };
  Kind kind;
  std::string detail;
};

/// A stabilizer code: a = n-k commuting, independent generators, with
/// optional logical X/Z operator representatives.
///
/// Codes are immutable after construction and validation; all member
/// queries are const and safe to share across threads.
class StabilizerCode {
 public:
  StabilizerCode() = default;
  StabilizerCode(std::string name, std::size_t n, std::vector<PauliOperator> generators);

  const std::string& name() const { return name_; }
  std::size_t num_qubits() const { return n_; }
  std::size_t num_generators() const { return generators_.size(); }
  /// k = n - a for independent generators.
  std::size_t num_logical() const { return n_ - generators_.size(); }

  const std::vector<PauliOperator>& generators() const { return generators_; }
  const PauliOperator& generator(std::size_t i) const { return generators_[i]; }

  const std::vector<PauliOperator>& logical_x() const { return logical_x_; }
  const std::vector<PauliOperator>& logical_z() const { return logical_z_; }
  bool has_logicals() const { return !logical_x_.empty() || num_logical() == 0; }

  void set_logicals(std::vector<PauliOperator> lx, std::vector<PauliOperator> lz);

  /// Generator rows in (x|z) binary symplectic form, a x 2n.
  const GF2Matrix& symplectic_matrix() const { return symplectic_; }

  /// Checks every structural invariant; empty result means the code is
  /// well formed.
  std::vector<CodeViolation> validate() const;

  /// Bit i set iff e anticommutes with generator i.
  BitVector syndrome(const PauliOperator& e) const;

  /// Some Pauli with the given syndrome: the lexicographically least
  /// solution of the a symplectic linear equations (solution space has
  /// dimension 2n - a).
  PauliOperator error_for_syndrome(const BitVector& v) const;

  /// True iff e is a product of generators up to phase.
  bool in_stabilizer_group(const PauliOperator& e) const;

  /// True iff e commutes with every generator.
  bool in_normalizer(const PauliOperator& e) const;

  /// Exact minimum weight over N(S) \ S, by enumeration in increasing
  /// weight. Throws ResourceLimitError when n exceeds max_qubits.
  std::size_t distance(std::size_t max_qubits = 16) const;

  /// Minimum-weight representative of the coset e*S (ties lexicographic).
  /// Enumerates all 2^a stabilizer elements; guarded for large a.
  PauliOperator reduce_mod_stabilizer(const PauliOperator& e) const;

  std::string to_string() const;

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<PauliOperator> generators_;
  std::vector<PauliOperator> logical_x_;
  std::vector<PauliOperator> logical_z_;
  GF2Matrix symplectic_;   // a x 2n, rows are (x|z) of generators
  GF2Matrix syndrome_map_; // a x 2n, rows are (z|x): syndrome = M * e
};

/// Finds k logical X/Z pairs for a validated code: each X[i] anticommutes
/// with Z[i], commutes with every generator and every other logical
/// representative. Minimum-weight representatives with lexicographic
/// tie-breaks where the search is affordable.
std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>> logical_operators(
    const StabilizerCode& code);

/// Returns `code` with logical operators filled in.
StabilizerCode with_logicals(StabilizerCode code);

/// Calls fn for every n-qubit Pauli of exactly the given weight, in
/// increasing support order. fn returning false stops the walk early;
/// for_each_pauli_of_weight then returns false.
bool for_each_pauli_of_weight(std::size_t n, std::size_t weight,
                              const std::function<bool(const PauliOperator&)>& fn);

/// Syndrome -> minimum-weight error lookup (coset leader per syndrome,
/// ties broken lexicographically). The table has 2^a entries.
class SyndromeDecoder {
 public:
  explicit SyndromeDecoder(const StabilizerCode& code, std::size_t max_table_bits = 24);

  const PauliOperator& decode(const BitVector& syndrome) const;
  const PauliOperator& leader(std::size_t syndrome_index) const { return table_[syndrome_index]; }

  /// Weight of the coset leader: the distance of a frame from the code
  /// space in the r-filter sense.
  std::size_t leader_weight(const BitVector& syndrome) const { return decode(syndrome).weight(); }

  std::size_t num_syndromes() const { return table_.size(); }

  static std::size_t index_of(const BitVector& syndrome);

 private:
  std::vector<PauliOperator> table_;
};

}  // namespace stabkit

#endif  // STABKIT_STABILIZER_CODE_HPP
