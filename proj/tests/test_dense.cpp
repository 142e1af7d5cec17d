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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "stabkit/dense_state.hpp"
#include "stabkit/knill_laflamme.hpp"
#include "stabkit/registry.hpp"

using stabkit::DenseState;
using stabkit::PauliOperator;
using Complex = std::complex<double>;

TEST_CASE("H squared is the identity") {
  std::mt19937_64 rng(3);
  DenseState s(3);
  s.apply_h(1);
  s.apply_x(0);
  DenseState before = s;
  s.apply_h(2);
  s.apply_h(2);
  CHECK(s.fidelity(before) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Y|0> = i|1> exactly") {
  DenseState s(1);
  s.apply_pauli(PauliOperator::parse("Y"));
  CHECK(std::abs(s.amplitudes()[0]) < 1e-15);
  CHECK(std::abs(s.amplitudes()[1] - Complex(0, 1)) < 1e-15);
}

TEST_CASE("conjugating X by the pi/8 rotation gives e^{i pi/4} X P^dagger") {
  // Check T X T^dag |psi> == e^{i pi/4} X P^dag |psi> on a random state.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    DenseState psi(1);
    psi.apply_h(0);
    psi.apply_rz(0, 0.1 * static_cast<double>(trial));

    DenseState lhs = psi;
    lhs.apply_t_dagger(0);
    lhs.apply_x(0);
    lhs.apply_t(0);

    DenseState rhs = psi;
    rhs.apply_p_dagger(0);
    rhs.apply_x(0);
    const Complex phase = std::polar(1.0, std::numbers::pi / 4);
    for (auto& a : rhs.amplitudes()) a *= phase;

    CHECK(std::abs(lhs.amplitudes()[0] - rhs.amplitudes()[0]) < 1e-12);
    CHECK(std::abs(lhs.amplitudes()[1] - rhs.amplitudes()[1]) < 1e-12);
  }
}

TEST_CASE("R_{theta/2} equals cos I - i sin Z up to global phase") {
  const double theta = 0.77;
  DenseState s(1);
  s.apply_h(0);
  DenseState rotated = s;
  rotated.apply_rz(0, theta);

  DenseState expected(1);
  // cos(theta/2) |+> - i sin(theta/2) Z |+>, then normalize phases away.
  const double c = std::cos(theta / 2), d = std::sin(theta / 2);
  expected.amplitudes()[0] = (c + Complex(0, -1) * d) / std::sqrt(2.0);
  expected.amplitudes()[1] = (c - Complex(0, -1) * d) / std::sqrt(2.0);
  CHECK(rotated.fidelity(expected) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Bell state measurement correlations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    DenseState s(2);
    s.apply_h(0);
    s.apply_cnot(0, 1);
    CHECK(s.expectation(PauliOperator::parse("XX")).real() == doctest::Approx(1.0));
    CHECK(s.expectation(PauliOperator::parse("ZZ")).real() == doctest::Approx(1.0));
    const int a = s.measure_qubit_z(0, rng);
    const int b = s.measure_qubit_z(1, rng);
    CHECK(a == b);
  }
}

TEST_CASE("nine-qubit code space spans the (|000>+-|111>)^3 states") {
  const auto basis = stabkit::codeword_basis(stabkit::shor_code());
  REQUIRE(basis.size() == 2);

  // Build (|000>+|111>)(|000>+|111>)(|000>+|111>) and the all-minus pattern;
  // both must lie in span(basis). Which linear combinations they are depends
  // on the logical operator convention, which the span check avoids.
  for (int minus : {0, 1}) {
    DenseState expected(9);
    auto& amps = expected.amplitudes();
    for (auto& a : amps) a = 0;
    for (int t1 = 0; t1 < 2; ++t1) {
      for (int t2 = 0; t2 < 2; ++t2) {
        for (int t3 = 0; t3 < 2; ++t3) {
          const std::uint64_t idx = (t1 ? 0b111000000u : 0u) | (t2 ? 0b000111000u : 0u) |
                                    (t3 ? 0b000000111u : 0u);
          const double sign = (minus && (t1 + t2 + t3) % 2 != 0) ? -1.0 : 1.0;
          amps[idx] = sign / std::sqrt(8.0);
        }
      }
    }
    const double in_span = std::norm(basis[0].inner_product(expected)) +
                           std::norm(basis[1].inner_product(expected));
    CHECK(in_span == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("five-qubit code space has dimension 2") {
  const auto basis = stabkit::codeword_basis(stabkit::five_qubit_code());
  CHECK(basis.size() == 2);
  CHECK(std::abs(basis[0].inner_product(basis[1])) < 1e-12);
  for (const auto& g : stabkit::five_qubit_code().generators()) {
    for (const auto& psi : basis) {
      CHECK(psi.expectation(g).real() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("CSS codewords are uniform superpositions over the dual code") {
  const auto zero = stabkit::logical_zero(stabkit::steane_code());
  // Support must be exactly the 8 words of dual(Hamming), all amplitudes
  // equal in magnitude.
  std::size_t support = 0;
  double mag = 0;
  for (const auto& a : zero.amplitudes()) {
    if (std::abs(a) > 1e-12) {
      ++support;
      if (mag == 0) {
        mag = std::abs(a);
      } else {
        CHECK(std::abs(a) == doctest::Approx(mag).epsilon(1e-10));
      }
    }
  }
  CHECK(support == 8);
  // Each support word satisfies the Hamming checks (it lies in C1).
  const auto& ham = stabkit::hamming_7_4();
  for (std::uint64_t idx = 0; idx < zero.dimension(); ++idx) {
    if (std::abs(zero.amplitudes()[idx]) > 1e-12) {
      stabkit::BitVector word(7);
      for (std::size_t q = 0; q < 7; ++q) word.set(q, (idx >> (6 - q)) & 1);
      CHECK(ham.is_codeword(word));
    }
  }
}

TEST_CASE("knill-laflamme: five-qubit is a nondegenerate code for weight-1 errors") {
  const auto report = stabkit::verify_knill_laflamme(stabkit::five_qubit_code(),
                                                     stabkit::weight_one_errors(5));
  CHECK(report.is_code);
  CHECK_FALSE(report.is_degenerate);
  CHECK(report.max_residual <= 1e-10);
}

TEST_CASE("knill-laflamme: nine-qubit is a degenerate code for weight-1 errors") {
  const auto report = stabkit::verify_knill_laflamme(stabkit::shor_code(),
                                                     stabkit::weight_one_errors(9));
  CHECK(report.is_code);
  CHECK(report.is_degenerate);
}

TEST_CASE("knill-laflamme: empty error list is trivially a code") {
  const auto report = stabkit::verify_knill_laflamme(stabkit::five_qubit_code(), {});
  CHECK(report.is_code);
  CHECK_FALSE(report.is_degenerate);
}

TEST_CASE("knill-laflamme rejects weight-1 errors on a distance-2 code") {
  // [[4,2,2]] with stabilizer XXXX, ZZZZ detects but cannot correct
  // single-qubit errors.
  stabkit::StabilizerCode code("422", 4,
                               {PauliOperator::parse("XXXX"), PauliOperator::parse("ZZZZ")});
  code = stabkit::with_logicals(std::move(code));
  const auto report = stabkit::verify_knill_laflamme(code, stabkit::weight_one_errors(4));
  CHECK_FALSE(report.is_code);
}

TEST_CASE("KL agrees with syndrome-based correctability on weight-1 sets") {
  for (const auto* code : {&stabkit::five_qubit_code(), &stabkit::steane_code(),
                           &stabkit::shor_code()}) {
    const auto report = stabkit::verify_knill_laflamme(*code,
                                                       stabkit::weight_one_errors(code->num_qubits()));
    // Syndrome view: weight-1 errors are correctable iff any two with the
    // same syndrome differ by a stabilizer element.
    bool correctable = true;
    const auto errors = stabkit::weight_one_errors(code->num_qubits());
    for (const auto& e : errors) {
      for (const auto& f : errors) {
        if (code->syndrome(e) == code->syndrome(f)) {
          if (!code->in_stabilizer_group(e.multiply(f))) correctable = false;
        }
      }
    }
    CHECK(report.is_code == correctable);
  }
}

TEST_CASE("a continuous phase error is discretized and corrected exactly") {
  // Inject R_{theta/2} on one qubit of an encoded nine-qubit state, measure
  // the stabilizer projectively, correct the deduced error, and land back on
  // the exact input state.
  const auto& code = stabkit::shor_code();
  const stabkit::SyndromeDecoder decoder(code);
  const auto basis = stabkit::codeword_basis(code);
  for (const double theta : {0.3, 1.0, 2.5}) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(theta * 1000));
    for (int trial = 0; trial < 5; ++trial) {
      DenseState psi(9);
      // Random encoded state alpha |0bar> + beta |1bar|.
      const double angle = 0.1 + 0.2 * trial;
      for (std::size_t b = 0; b < psi.dimension(); ++b) {
        psi.amplitudes()[b] = std::cos(angle) * basis[0].amplitudes()[b] +
                              std::sin(angle) * basis[1].amplitudes()[b];
      }
      DenseState original = psi;
      psi.apply_rz(4, theta);

      stabkit::BitVector synd(code.num_generators());
      for (std::size_t g = 0; g < code.num_generators(); ++g) {
        synd.set(g, psi.measure_pauli(code.generator(g), rng) < 0);
      }
      psi.apply_pauli(decoder.decode(synd).inverse());
      CHECK(psi.fidelity(original) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}
