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

// Cross-module scenarios: decode round trips on dense codewords, joint
// parity measurements on encoded states, nondestructive logical readout,
// and the union-bound sanity of the Monte Carlo estimates.

#include <doctest.h>

#include <random>

#include "stabkit/dense_state.hpp"
#include "stabkit/gadget_check.hpp"
#include "stabkit/monte_carlo.hpp"
#include "stabkit/registry.hpp"
#include "stabkit/tableau.hpp"
#include "stabkit/threshold.hpp"

using namespace stabkit;

TEST_CASE("syndrome decoding restores dense codewords for every correctable error") {
  for (const auto* code : {&five_qubit_code(), &steane_code(), &shor_code()}) {
    const SyndromeDecoder decoder(*code);
    const auto basis = codeword_basis(*code);
    const std::size_t n = code->num_qubits();
    // Every weight-1 error (t = 1 for all bundled codes): decode the
    // syndrome and undo; the codeword must return exactly.
    for (std::size_t q = 0; q < n; ++q) {
      for (char kind : {'X', 'Y', 'Z'}) {
        const auto e = PauliOperator::single(n, q, kind);
        const auto& correction = decoder.decode(code->syndrome(e));
        for (const auto& psi : basis) {
          DenseState state = psi;
          state.apply_pauli(e);
          state.apply_pauli(correction.inverse());
          CHECK(state.fidelity(psi) == doctest::Approx(1.0).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("Z1 Z2 is a deterministic +1 measurement on nine-qubit codewords") {
  const auto& code = shor_code();
  std::mt19937_64 rng(21);
  Tableau t(9);
  for (const auto& g : code.generators()) t.measure_pauli_forced(g, +1);
  const auto z1z2 = PauliOperator::parse("ZZIIIIIII");
  const auto outcome = t.deterministic_outcome(z1z2);
  REQUIRE(outcome.has_value());
  CHECK(*outcome == +1);

  // The dense view agrees.
  const auto zero = logical_zero(code);
  CHECK(zero.expectation(z1z2).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("substituting |0bar> for the Bell pair reads the logical Z nondestructively") {
  const auto& code = steane_code();
  GadgetContext ctx(code);
  auto data = ctx.alloc_block();
  auto anc = ctx.alloc_block();
  ctx.append_verified_prep(anc, '0');
  for (std::size_t i = 0; i < 7; ++i) ctx.cnot(data[i], anc[i]);
  std::size_t first = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    const std::size_t m = ctx.measure_z(anc[i]);
    if (i == 0) first = m;
  }
  const auto css = make_css_data(code);
  const auto bit_code = css.bit_code;
  const auto z_log = css.z_logical;
  ctx.add_rule([first, bit_code, z_log](FrameRun& run) {
    BitVector f = run.flips_window(first, 7);
    f ^= bit_code.decode_word(f);
    run.emit_logical_flip(f.dot(z_log));
  });
  const Gadget g = ctx.finish("measure-z-keep", {data}, {data});

  // Logical X on the data flips the readout; logical Z does not; and the
  // data block survives with its frame intact modulo gauge.
  const FrameDecoder dec(code);
  for (int which : {0, 1}) {
    PauliFrame seed(g.circuit.n_qubits);
    const auto& rep = which == 0 ? code.logical_x()[0] : code.logical_z()[0];
    BitVector x(g.circuit.n_qubits), z(g.circuit.n_qubits);
    for (std::size_t i = 0; i < 7; ++i) {
      if (rep.x_bit(i)) x.set(data[i], true);
      if (rep.z_bit(i)) z.set(data[i], true);
    }
    seed.multiply(PauliOperator::from_xz(g.circuit.n_qubits, x, z));
    const auto result = propagate(g.circuit, g.rules, FaultPattern{}, seed);
    REQUIRE_FALSE(result.rejected);
    REQUIRE(result.logical_flips.size() == 1);
    CHECK(result.logical_flips[0] == (which == 0));
    // Nondestructive: the data block still carries the logical frame.
    const auto out = dec.decode(result.frame.restrict_to(data));
    CHECK(out.x_class.get(0) == (which == 0));
  }

  // And it is fault tolerant in the Meas sense.
  GadgetCheckOptions opt;
  opt.fault_budget = 1;
  opt.input_weight = 1;
  opt.jobs = 2;
  const auto report = check_property(g, GadgetProperty::kMeas, opt);
  if (!report.passed) {
    FAIL_CHECK("Meas failed: " << report.detail << " with "
                               << report.counterexample.to_string());
  }
}

TEST_CASE("ExRec failure stays under the union bound A p^2 at sampled rates") {
  const auto harness = make_cnot_exrec(steane_code());
  const double a_count =
      static_cast<double>(count_fault_sets(harness.full.circuit.locations.size(), 1));
  for (double p : {1e-3, 3e-3}) {
    const auto report =
        simulate_exrec(harness, NoiseModel::depolarizing(p), 31337, 40000, 2);
    CHECK(report.wilson_lo <= a_count * p * p);
  }
}

TEST_CASE("uncorrelated noise with per-type rates only hits the enabled types") {
  Circuit c;
  c.n_qubits = 2;
  for (int i = 0; i < 50; ++i) {
    c.h(0);
    c.cnot(0, 1);
    c.wait(1);
  }
  std::array<double, 5> p_by_type{};
  p_by_type[static_cast<std::size_t>(LocationType::kGate2)] = 0.3;  // CNOT only
  const auto noise = NoiseModel::uncorrelated(p_by_type, {1, 1, 1});
  std::mt19937_64 rng(5);
  FaultPattern pattern;
  noise.sample_range(c, 0, c.locations.size(), rng, pattern);
  CHECK(pattern.size() > 0);
  for (const auto& f : pattern.faults) {
    CHECK(c.locations[f.location].kind == Location::Kind::kCnot);
  }
}

TEST_CASE("gate ExRecs for H and P sweep clean under single faults") {
  for (const char* gate : {"H", "P"}) {
    const auto harness = make_gate_exrec(steane_code(), gate);
    const auto report = check_exrec_single_faults(harness, 0, 2);
    if (report.failures != 0) {
      FAIL_CHECK(gate << " exrec failed: " << report.detail);
    }
  }
}

TEST_CASE("frames passing the 0-filter decode the same with or without the syndrome") {
  // The ideal decoder is the star-decoder with the syndrome discarded: for
  // any frame inside the zero-distance filter the syndrome register is
  // trivial, so both give exactly the logical class.
  const auto& code = steane_code();
  const FrameDecoder dec(code);
  std::mt19937_64 rng(2718);
  std::size_t zero_filter_hits = 0;
  for (int trial = 0; trial < 500; ++trial) {
    BitVector x(7), z(7);
    for (std::size_t q = 0; q < 7; ++q) {
      x.set(q, rng() & 1);
      z.set(q, rng() & 1);
    }
    const auto frame = PauliOperator::from_xz(7, x, z);
    const auto with_syndrome = std::make_pair(dec.decode(frame), dec.syndrome(frame));
    if (dec.filter_weight(frame) == 0) {
      ++zero_filter_hits;
      CHECK_FALSE(with_syndrome.second.any());
    }
    // Discarding the syndrome never changes the logical class.
    CHECK(dec.decode(frame) == with_syndrome.first);
  }
  CHECK(zero_filter_hits > 0);
}
