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

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "stabkit/pauli.hpp"

using stabkit::BitVector;
using stabkit::PauliOperator;

namespace {

// Dense-matrix oracle, independent of the symplectic representation: a
// Pauli string maps to an explicit 2^n x 2^n complex matrix and products
// are ordinary matrix products.
using Matrix = std::vector<std::vector<std::complex<double>>>;

Matrix single_matrix(char kind) {
  const std::complex<double> i(0, 1);
  switch (kind) {
    case 'I':
      return {{1, 0}, {0, 1}};
    case 'X':
      return {{0, 1}, {1, 0}};
    case 'Y':
      return {{0, -i}, {i, 0}};
    case 'Z':
      return {{1, 0}, {0, -1}};
  }
  REQUIRE(false);
  return {};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ar = a.size(), br = b.size();
  Matrix out(ar * br, std::vector<std::complex<double>>(ar * br));
  for (std::size_t i = 0; i < ar; ++i) {
    for (std::size_t j = 0; j < ar; ++j) {
      for (std::size_t k = 0; k < br; ++k) {
        for (std::size_t l = 0; l < br; ++l) {
          out[i * br + k][j * br + l] = a[i][j] * b[k][l];
        }
      }
    }
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Matrix dense_of(const PauliOperator& p) {
  const std::complex<double> i(0, 1);
  Matrix m = {{1}};
  for (std::size_t q = 0; q < p.num_qubits(); ++q) m = kron(m, single_matrix(p.letter(q)));
  std::complex<double> phase = 1;
  for (int s = 0; s < p.phase_i_exponent(); ++s) phase *= i;
  for (auto& row : m) {
    for (auto& v : row) v *= phase;
  }
  return m;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
    }
  }
  return true;
}

PauliOperator random_pauli(std::size_t n, std::mt19937_64& rng) {
  BitVector x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x.set(q, rng() & 1);
    z.set(q, rng() & 1);
  }
  return PauliOperator(n, std::move(x), std::move(z), static_cast<std::uint8_t>(rng() & 3));
}

}  // namespace

TEST_CASE("pauli parse/print round-trips with explicit signs") {
  for (const char* s : {"+XIZ", "-iY", "+iXZZXI", "-ZZ", "+IIII", "+Y", "-XYZXYZ"}) {
    const PauliOperator p = PauliOperator::parse(s);
    CHECK(p.to_string() == s);
    CHECK(PauliOperator::parse(p.to_string()) == p);
  }
  CHECK(PauliOperator::parse("XZ") == PauliOperator::parse("+XZ"));
  CHECK_THROWS_AS((void)PauliOperator::parse("XQ"), std::invalid_argument);
}

TEST_CASE("multiply(X, Z) is -iY") {
  const auto x = PauliOperator::parse("X");
  const auto z = PauliOperator::parse("Z");
  const auto prod = x.multiply(z);
  CHECK(prod.letter(0) == 'Y');
  CHECK(prod.phase_i_exponent() == 3);
  CHECK(prod.to_string() == "-iY");
}

TEST_CASE("single-qubit Paulis are involutions with trivial phase") {
  for (const char* s : {"X", "Y", "Z"}) {
    const auto p = PauliOperator::parse(s);
    const auto sq = p.multiply(p);
    CHECK(sq.is_identity());
    CHECK(sq.phase_i_exponent() == 0);
  }
}

TEST_CASE("multiply matches the dense matrix oracle on all 1- and 2-qubit pairs") {
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  std::vector<PauliOperator> ops1, ops2;
  for (char a : letters) ops1.push_back(PauliOperator::parse(std::string(1, a)));
  for (char a : letters) {
    for (char b : letters) ops2.push_back(PauliOperator::parse(std::string{a, b}));
  }
  for (const auto& ops : {ops1, ops2}) {
    for (const auto& p : ops) {
      for (const auto& q : ops) {
        CHECK(matrices_equal(dense_of(p.multiply(q)), matmul(dense_of(p), dense_of(q))));
      }
    }
  }
}

TEST_CASE("five-qubit generator product XORs the bit rows") {
  const auto g1 = PauliOperator::parse("XZZXI");
  const auto g2 = PauliOperator::parse("IXZZX");
  const auto prod = g1.multiply(g2);
  // Bitwise oracle computed directly from the two rows.
  for (std::size_t q = 0; q < 5; ++q) {
    CHECK(prod.x_bit(q) == (g1.x_bit(q) ^ g2.x_bit(q)));
    CHECK(prod.z_bit(q) == (g1.z_bit(q) ^ g2.z_bit(q)));
  }
}

TEST_CASE("commutation: XZ = -ZX, identity commutes, Table 4 rows commute") {
  const auto x = PauliOperator::parse("X");
  const auto z = PauliOperator::parse("Z");
  CHECK_FALSE(x.commutes_with(z));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_pauli(6, rng);
    CHECK(p.commutes_with(PauliOperator(6)));
  }

  const std::array<const char*, 4> rows = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  for (const char* a : rows) {
    for (const char* b : rows) {
      CHECK(PauliOperator::parse(a).commutes_with(PauliOperator::parse(b)));
    }
  }
}

TEST_CASE("pairs either commute or anticommute, consistent with the dense oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_pauli(2, rng);
    const auto q = random_pauli(2, rng);
    const Matrix pq = matmul(dense_of(p), dense_of(q));
    const Matrix qp = matmul(dense_of(q), dense_of(p));
    Matrix neg_qp = qp;
    for (auto& row : neg_qp) {
      for (auto& v : row) v = -v;
    }
    if (p.commutes_with(q)) {
      CHECK(matrices_equal(pq, qp));
    } else {
      CHECK(matrices_equal(pq, neg_qp));
    }
  }
}

TEST_CASE("multiply is associative and phase-exact on random operators") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_pauli(8, rng);
    const auto q = random_pauli(8, rng);
    const auto r = random_pauli(8, rng);
    CHECK(p.multiply(q).multiply(r) == p.multiply(q.multiply(r)));
  }
}

TEST_CASE("weight is subadditive under products") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_pauli(10, rng);
    const auto q = random_pauli(10, rng);
    CHECK(p.multiply(q).weight() <= p.weight() + q.weight());
  }
}

TEST_CASE("inverse gives the identity with phase zero") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_pauli(9, rng);
    const auto id = p.multiply(p.inverse());
    CHECK(id.is_identity());
    CHECK(id.phase_i_exponent() == 0);
    CHECK(id.xz_phase() == 0);
  }
}

TEST_CASE("weight equals the popcount of x OR z") {
  const auto p = PauliOperator::parse("XYIZI");
  CHECK(p.weight() == 3);
  CHECK(p.weight() == p.x_bits().or_popcount(p.z_bits()));
}

TEST_CASE("dimension mismatch raises") {
  const auto a = PauliOperator::parse("XX");
  const auto b = PauliOperator::parse("X");
  CHECK_THROWS_AS((void)a.multiply(b), stabkit::DimensionError);
  CHECK_THROWS_AS((void)a.commutes_with(b), stabkit::DimensionError);
}

TEST_CASE("symplectic row round-trip") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_pauli(7, rng);
    const auto row = stabkit::symplectic_row(p);
    const auto back = stabkit::pauli_from_symplectic_row(row);
    CHECK(back.equals_up_to_phase(p));
    CHECK(back.phase_i_exponent() == 0);
  }
}
