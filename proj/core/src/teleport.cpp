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

#include "stabkit/teleport.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "stabkit/dense_state.hpp"
#include "stabkit/gadgets.hpp"
#include "stabkit/registry.hpp"

namespace stabkit {

namespace {

using Complex = std::complex<double>;

// |psi> (x) |phi> on 2n qubits, data block in the leading factor.
DenseState tensor(const DenseState& data, const DenseState& anc) {
  const std::size_t n1 = data.num_qubits(), n2 = anc.num_qubits();
  DenseState out(n1 + n2, n1 + n2);
  auto& amps = out.amplitudes();
  for (std::size_t i = 0; i < data.dimension(); ++i) {
    for (std::size_t j = 0; j < anc.dimension(); ++j) {
      amps[(i << n2) | j] = data.amplitudes()[i] * anc.amplitudes()[j];
    }
  }
  return out;
}

}  // namespace

Circuit pi8_teleport_circuit(const StabilizerCode& code) {
  const std::size_t n = code.num_qubits();
  Circuit c;
  c.n_qubits = 2 * n;
  // Ancilla block (qubits n..2n-1) controls onto the data block.
  for (std::size_t i = 0; i < n; ++i) c.cnot(n + i, i);
  for (std::size_t i = 0; i < n; ++i) c.measure_z(i);
  return c;
}

Pi8TeleportReport check_pi8_teleportation(const StabilizerCode& code, double tolerance) {
  Pi8TeleportReport report;
  report.min_fidelity = 1.0;
  const std::size_t n = code.num_qubits();
  const auto basis = codeword_basis(code);
  const CssData css = make_css_data(code);
  const Complex phase = std::polar(1.0, std::numbers::pi / 4);

  // Ancilla |0bar> + e^{i pi/4} |1bar>.
  DenseState magic = basis[0];
  for (std::size_t b = 0; b < magic.dimension(); ++b) {
    magic.amplitudes()[b] =
        (basis[0].amplitudes()[b] + phase * basis[1].amplitudes()[b]) / std::sqrt(2.0);
  }

  struct Input {
    const char* name;
    Complex alpha, beta;
  };
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Input inputs[] = {
      {"0", 1.0, 0.0}, {"1", 0.0, 1.0}, {"+", inv_sqrt2, inv_sqrt2}};

  const PauliOperator zbar_data = [&] {  // logical Z embedded on the data block
    BitVector x(2 * n), z(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (css.z_logical.get(i)) z.set(i, true);
    }
    return PauliOperator::from_xz(2 * n, std::move(x), std::move(z));
  }();

  report.passed = true;
  for (const auto& input : inputs) {
    DenseState psi = basis[0];
    for (std::size_t b = 0; b < psi.dimension(); ++b) {
      psi.amplitudes()[b] =
          input.alpha * basis[0].amplitudes()[b] + input.beta * basis[1].amplitudes()[b];
    }

    for (int branch = 0; branch < 2; ++branch) {
      DenseState state = tensor(psi, magic);
      for (std::size_t i = 0; i < n; ++i) state.apply_cnot(n + i, i);

      // Force the logical branch, then read the physical word.
      const double prob = state.postselect_pauli(zbar_data, branch == 0 ? +1 : -1);
      if (prob < 1e-12) continue;  // branch unreachable (never for these inputs)

      std::mt19937_64 rng(1234 + static_cast<std::uint64_t>(branch));
      BitVector word(n);
      for (std::size_t i = 0; i < n; ++i) {
        word.set(i, state.measure_qubit_z(i, rng) < 0);
      }
      // Classical decode of the destructive readout: correct the word with
      // the bit code, then take the logical coset bit.
      BitVector corrected = word;
      corrected ^= css.bit_code.decode_word(word);
      const bool decoded = corrected.dot(css.z_logical);

      Pi8BranchResult r;
      r.input = input.name;
      r.branch = branch;
      r.decode_consistent = decoded == (branch == 1);

      if (branch == 1) {
        // Correction X-bar P-bar-dagger on the ancilla block; logical P is
        // transversal P-dagger here, so its inverse is transversal P.
        for (std::size_t i = 0; i < n; ++i) state.apply_p(n + i);
        for (std::size_t i = 0; i < n; ++i) {
          if (css.x_logical.get(i)) state.apply_x(n + i);
        }
      }

      // Expected output: R-bar_{pi/8} |psi-bar> on the ancilla block, data
      // block collapsed onto the measured word.
      DenseState expected_anc = basis[0];
      for (std::size_t b = 0; b < expected_anc.dimension(); ++b) {
        expected_anc.amplitudes()[b] = input.alpha * basis[0].amplitudes()[b] +
                                       phase * input.beta * basis[1].amplitudes()[b];
      }
      std::uint64_t word_index = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (word.get(i)) word_index |= std::uint64_t{1} << (n - 1 - i);
      }
      DenseState expected = tensor(DenseState::computational_basis(n, word_index), expected_anc);

      r.fidelity = state.fidelity(expected);
      report.min_fidelity = std::min(report.min_fidelity, r.fidelity);
      if (r.fidelity < 1.0 - tolerance || !r.decode_consistent) report.passed = false;
      report.branches.push_back(r);
    }
  }
  if (report.branches.size() != 6) report.passed = false;
  return report;
}

}  // namespace stabkit
