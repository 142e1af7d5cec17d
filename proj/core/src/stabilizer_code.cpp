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

#include "stabkit/stabilizer_code.hpp"

#include <algorithm>

namespace stabkit {

namespace {

// (z|x) row so that row . (x_e|z_e) is the symplectic inner product with the
// generator.
BitVector syndrome_row(const PauliOperator& g) {
  const std::size_t n = g.num_qubits();
  BitVector row(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (g.z_bit(q)) row.set(q, true);
    if (g.x_bit(q)) row.set(n + q, true);
  }
  return row;
}

}  // namespace

StabilizerCode::StabilizerCode(std::string name, std::size_t n,
                               std::vector<PauliOperator> generators)
    : name_(std::move(name)), n_(n), generators_(std::move(generators)) {
  std::vector<BitVector> symp, synd;
  symp.reserve(generators_.size());
  synd.reserve(generators_.size());
  for (const auto& g : generators_) {
    if (g.num_qubits() != n_) throw DimensionError("generator length differs from n");
    symp.push_back(symplectic_row(g));
    synd.push_back(syndrome_row(g));
  }
  if (symp.empty()) {
    symplectic_ = GF2Matrix(0, 2 * n_);
    syndrome_map_ = GF2Matrix(0, 2 * n_);
  } else {
    symplectic_ = GF2Matrix(std::move(symp));
    syndrome_map_ = GF2Matrix(std::move(synd));
  }
}

void StabilizerCode::set_logicals(std::vector<PauliOperator> lx, std::vector<PauliOperator> lz) {
  logical_x_ = std::move(lx);
  logical_z_ = std::move(lz);
}

std::vector<CodeViolation> StabilizerCode::validate() const {
  std::vector<CodeViolation> out;
  const std::size_t a = generators_.size();

  for (std::size_t i = 0; i < a; ++i) {
    if (generators_[i].num_qubits() != n_) {
      out.push_back({CodeViolation::Kind::kLengthMismatch,
                     "generator " + std::to_string(i) + " has wrong length"});
    }
    if (!generators_[i].is_hermitian()) {
      out.push_back({CodeViolation::Kind::kImaginaryPhase,
                     "generator " + std::to_string(i) + " = " + generators_[i].to_string() +
                         " has imaginary phase (squares to -1)"});
    }
  }

  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = i + 1; j < a; ++j) {
      if (!generators_[i].commutes_with(generators_[j])) {
        out.push_back({CodeViolation::Kind::kNonCommutingPair,
                       "generators " + std::to_string(i) + " and " + std::to_string(j) +
                           " anticommute"});
      }
    }
  }

  // Independence in the binary symplectic picture. A dependency whose signed
  // product is -1 means -1 is in the generated group; a +1 product is plain
  // redundancy. Either way the generating set is rejected.
  if (a > 0 && symplectic_.rank() < a) {
    const auto deps = symplectic_.transpose().null_space();
    for (const auto& dep : deps) {
      PauliOperator prod(n_);
      std::string members;
      for (std::size_t i = 0; i < a; ++i) {
        if (dep.get(i)) {
          prod = prod.multiply(generators_[i]);
          if (!members.empty()) members += "*";
          members += "g" + std::to_string(i);
        }
      }
      if (!prod.is_hermitian() || prod.sign_bit()) {
        out.push_back({CodeViolation::Kind::kMinusIdentityInSpan,
                       members + " = " + prod.to_string() + " (group contains -1)"});
      } else {
        out.push_back({CodeViolation::Kind::kDependentGenerators,
                       members + " = " + prod.to_string() + " (dependent generators)"});
      }
    }
  }

  if (!logical_x_.empty() || !logical_z_.empty()) {
    const std::size_t k = num_logical();
    if (logical_x_.size() != k || logical_z_.size() != k) {
      out.push_back({CodeViolation::Kind::kLogicalCount,
                     "expected " + std::to_string(k) + " logical X and Z representatives"});
    } else {
      auto check = [&](const PauliOperator& p, const std::string& label) {
        for (std::size_t g = 0; g < a; ++g) {
          if (!p.commutes_with(generators_[g])) {
            out.push_back({CodeViolation::Kind::kLogicalCommutation,
                           label + " anticommutes with generator " + std::to_string(g)});
          }
        }
      };
      for (std::size_t i = 0; i < k; ++i) {
        check(logical_x_[i], "logical_x[" + std::to_string(i) + "]");
        check(logical_z_[i], "logical_z[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j < k; ++j) {
          const bool want_anticommute = (i == j);
          if (logical_x_[i].commutes_with(logical_z_[j]) == want_anticommute) {
            out.push_back({CodeViolation::Kind::kLogicalCommutation,
                           "logical_x[" + std::to_string(i) + "] / logical_z[" +
                               std::to_string(j) + "] commutation is wrong"});
          }
          if (j > i) {
            if (!logical_x_[i].commutes_with(logical_x_[j]) ||
                !logical_z_[i].commutes_with(logical_z_[j])) {
              out.push_back({CodeViolation::Kind::kLogicalCommutation,
                             "logical representatives " + std::to_string(i) + "," +
                                 std::to_string(j) + " of like type anticommute"});
            }
          }
        }
      }
    }
  }
  return out;
}

BitVector StabilizerCode::syndrome(const PauliOperator& e) const {
  if (e.num_qubits() != n_) throw DimensionError("error length differs from code n");
  return syndrome_map_.apply_right(symplectic_row(e));
}

PauliOperator StabilizerCode::error_for_syndrome(const BitVector& v) const {
  if (v.size() != generators_.size()) throw DimensionError("syndrome length differs from a");
  auto sol = syndrome_map_.solve_lex_min(v);
  // Always solvable for a valid code: the generator rows are independent.
  if (!sol) throw std::logic_error("syndrome system inconsistent; code invalid?");
  return pauli_from_symplectic_row(*sol);
}

bool StabilizerCode::in_stabilizer_group(const PauliOperator& e) const {
  return symplectic_.in_row_space(symplectic_row(e));
}

bool StabilizerCode::in_normalizer(const PauliOperator& e) const { return !syndrome(e).any(); }

std::size_t StabilizerCode::distance(std::size_t max_qubits) const {
  if (n_ > max_qubits) {
    throw ResourceLimitError("distance enumeration limited to " + std::to_string(max_qubits) +
                             " qubits");
  }
  if (num_logical() == 0) return 0;  // N(S)\S is empty up to phases
  for (std::size_t w = 1; w <= n_; ++w) {
    std::size_t found = 0;
    for_each_pauli_of_weight(n_, w, [&](const PauliOperator& p) {
      if (in_normalizer(p) && !in_stabilizer_group(p)) {
        found = w;
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return 0;
}

PauliOperator StabilizerCode::reduce_mod_stabilizer(const PauliOperator& e) const {
  const std::size_t a = generators_.size();
  if (a > 20) throw ResourceLimitError("stabilizer coset enumeration limited to 2^20 elements");
  PauliOperator best = e;
  for (std::size_t mask = 1; mask < (std::size_t{1} << a); ++mask) {
    PauliOperator cand = e;
    for (std::size_t i = 0; i < a; ++i) {
      if ((mask >> i) & 1) cand = cand.multiply(generators_[i]);
    }
    if (cand.weight() < best.weight() ||
        (cand.weight() == best.weight() && cand.lex_less_xz(best))) {
      best = cand;
    }
  }
  return best;
}

std::string StabilizerCode::to_string() const {
  std::string s = name_ + " [[" + std::to_string(n_) + "," + std::to_string(num_logical()) + "]]\n";
  for (const auto& g : generators_) s += g.to_string() + "\n";
  return s;
}

bool for_each_pauli_of_weight(std::size_t n, std::size_t weight,
                              const std::function<bool(const PauliOperator&)>& fn) {
  if (weight > n) return true;
  if (weight == 0) return fn(PauliOperator(n));
  std::vector<std::size_t> support(weight);
  for (std::size_t i = 0; i < weight; ++i) support[i] = i;
  std::vector<std::uint8_t> letters(weight, 0);  // 0=X, 1=Y, 2=Z
  const char kinds[3] = {'X', 'Y', 'Z'};
  while (true) {
    // All 3^w letter assignments on this support.
    std::fill(letters.begin(), letters.end(), 0);
    while (true) {
      PauliOperator p(n);
      for (std::size_t i = 0; i < weight; ++i) {
        p = p.multiply(PauliOperator::single(n, support[i], kinds[letters[i]]));
      }
      if (!fn(p)) return false;
      std::size_t pos = 0;
      while (pos < weight && letters[pos] == 2) {
        letters[pos] = 0;
        ++pos;
      }
      if (pos == weight) break;
      ++letters[pos];
    }
    // Next combination.
    std::size_t i = weight;
    while (i > 0) {
      --i;
      if (support[i] != i + n - weight) break;
      if (i == 0) return true;
    }
    if (support[i] == i + n - weight) return true;
    ++support[i];
    for (std::size_t j = i + 1; j < weight; ++j) support[j] = support[j - 1] + 1;
  }
}

std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>> logical_operators(
    const StabilizerCode& code) {
  const std::size_t n = code.num_qubits();
  const std::size_t k = code.num_logical();
  std::vector<PauliOperator> lx, lz;
  if (k == 0) return {lx, lz};

  if (k == 1 && n <= 16) {
    // Enumerate N(S)\S in increasing weight; the first coset found gives
    // logical Z, and the first element anticommuting with it gives logical X
    // (minimum-weight representatives, lexicographic tie-break).
    PauliOperator zbar(n);
    bool have_z = false;
    for (std::size_t w = 1; w <= n && !have_z; ++w) {
      PauliOperator best(n);
      for_each_pauli_of_weight(n, w, [&](const PauliOperator& p) {
        if (code.in_normalizer(p) && !code.in_stabilizer_group(p)) {
          if (!have_z || p.lex_less_xz(best)) best = p;
          have_z = true;
        }
        return true;
      });
      if (have_z) zbar = best;
    }
    PauliOperator xbar(n);
    bool have_x = false;
    for (std::size_t w = 1; w <= n && !have_x; ++w) {
      PauliOperator best(n);
      for_each_pauli_of_weight(n, w, [&](const PauliOperator& p) {
        if (code.in_normalizer(p) && p.anticommutes_with(zbar)) {
          if (!have_x || p.lex_less_xz(best)) best = p;
          have_x = true;
        }
        return true;
      });
      if (have_x) xbar = best;
    }
    if (!have_z || !have_x) throw std::logic_error("logical operator search failed");
    lx.push_back(xbar);
    lz.push_back(zbar);
    return {lx, lz};
  }

  // General case: extend the stabilizer row space to a basis of N(S), then
  // symplectic Gram-Schmidt the 2k coset representatives into X/Z pairs.
  const auto normalizer_basis = code.symplectic_matrix().num_rows() == 0
                                    ? GF2Matrix::identity(2 * n).rows()
                                    : [&] {
                                        GF2Matrix synd(0, 2 * n);
                                        for (const auto& g : code.generators()) {
                                          synd.append_row(syndrome_row(g));
                                        }
                                        return synd.null_space();
                                      }();

  GF2Matrix span = code.symplectic_matrix();
  std::size_t span_rank = span.rank();
  std::vector<BitVector> cosets;
  for (const auto& v : normalizer_basis) {
    if (cosets.size() == 2 * k) break;
    GF2Matrix trial = span;
    trial.append_row(v);
    if (trial.rank() > span_rank) {
      cosets.push_back(v);
      span = std::move(trial);
      ++span_rank;
    }
  }
  if (cosets.size() != 2 * k) throw std::logic_error("normalizer rank mismatch");

  auto symp = [&](const BitVector& a, const BitVector& b) {
    bool acc = false;
    for (std::size_t q = 0; q < n; ++q) {
      acc ^= (a.get(q) & b.get(n + q)) ^ (a.get(n + q) & b.get(q));
    }
    return acc;
  };

  std::vector<BitVector> pool = cosets;
  while (!pool.empty()) {
    BitVector u = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (symp(u, pool[i])) {
        partner = i;
        break;
      }
    }
    if (partner == pool.size()) throw std::logic_error("degenerate symplectic form on N(S)/S");
    BitVector v = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto& w : pool) {
      if (symp(w, v)) w ^= u;
      if (symp(w, u)) w ^= v;
    }
    lx.push_back(pauli_from_symplectic_row(u));
    lz.push_back(pauli_from_symplectic_row(v));
  }

  // Prefer low-weight representatives inside each coset when affordable.
  if (code.num_generators() <= 12) {
    for (auto& p : lx) p = code.reduce_mod_stabilizer(p);
    for (auto& p : lz) p = code.reduce_mod_stabilizer(p);
  }
  return {lx, lz};
}

StabilizerCode with_logicals(StabilizerCode code) {
  if (code.num_logical() > 0 && code.logical_x().empty()) {
    auto [lx, lz] = logical_operators(code);
    code.set_logicals(std::move(lx), std::move(lz));
  }
  return code;
}

SyndromeDecoder::SyndromeDecoder(const StabilizerCode& code, std::size_t max_table_bits) {
  const std::size_t a = code.num_generators();
  if (a > max_table_bits) {
    throw ResourceLimitError("syndrome table limited to 2^" + std::to_string(max_table_bits));
  }
  const std::size_t n = code.num_qubits();
  const std::size_t size = std::size_t{1} << a;
  table_.assign(size, PauliOperator(n));
  std::vector<bool> filled(size, false);
  filled[0] = true;  // identity decodes the trivial syndrome
  std::size_t remaining = size - 1;
  for (std::size_t w = 1; w <= n && remaining > 0; ++w) {
    // Visit the whole weight class so lexicographic tie-breaking is exact.
    for_each_pauli_of_weight(n, w, [&](const PauliOperator& p) {
      const std::size_t idx = index_of(code.syndrome(p));
      if (!filled[idx]) {
        table_[idx] = p;
        filled[idx] = true;
        --remaining;
      } else if (table_[idx].weight() == w && p.lex_less_xz(table_[idx])) {
        table_[idx] = p;
      }
      return true;
    });
  }
  if (remaining > 0) throw std::logic_error("unreachable syndromes; code invalid?");
}

const PauliOperator& SyndromeDecoder::decode(const BitVector& syndrome) const {
  return table_[index_of(syndrome)];
}

std::size_t SyndromeDecoder::index_of(const BitVector& syndrome) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < syndrome.size(); ++i) {
    if (syndrome.get(i)) idx |= std::size_t{1} << i;
  }
  return idx;
}

}  // namespace stabkit
