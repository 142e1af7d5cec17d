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

#include "stabkit/knill_laflamme.hpp"

#include <cmath>

namespace stabkit {

KLReport verify_knill_laflamme(const StabilizerCode& code,
                               const std::vector<PauliOperator>& errors, double tolerance,
                               std::size_t max_qubits) {
  KLReport report;
  report.tolerance = tolerance;
  const std::size_t m = errors.size();
  if (m == 0) {
    report.is_code = true;
    report.is_degenerate = false;
    return report;
  }

  const auto basis = codeword_basis(code, max_qubits);
  const std::size_t dim = basis.size();

  // E_a |psi_i> for all a, i.
  std::vector<std::vector<DenseState>> errored;
  errored.reserve(m);
  for (const auto& e : errors) {
    std::vector<DenseState> col;
    col.reserve(dim);
    for (const auto& psi : basis) {
      DenseState s = psi;
      s.apply_pauli(e);
      col.push_back(std::move(s));
    }
    errored.push_back(std::move(col));
  }

  report.c_matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m),
                                           static_cast<Eigen::Index>(m));
  report.is_code = true;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::complex<double> diag(0, 0);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          const std::complex<double> v = errored[a][i].inner_product(errored[b][j]);
          if (i == j) {
            if (i == 0) {
              diag = v;
            } else {
              report.max_residual = std::max(report.max_residual, std::abs(v - diag));
            }
          } else {
            report.max_residual = std::max(report.max_residual, std::abs(v));
          }
        }
      }
      report.c_matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = diag;
    }
  }
  report.is_code = report.max_residual <= tolerance;

  if (report.is_code) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(report.c_matrix);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      if (std::abs(solver.eigenvalues()(i)) > tolerance) ++rank;
    }
    report.is_degenerate = rank < m;
  }
  return report;
}

std::vector<PauliOperator> weight_one_errors(std::size_t n) {
  std::vector<PauliOperator> out;
  out.reserve(3 * n);
  for (std::size_t q = 0; q < n; ++q) {
    for (char kind : {'X', 'Y', 'Z'}) out.push_back(PauliOperator::single(n, q, kind));
  }
  return out;
}

}  // namespace stabkit
