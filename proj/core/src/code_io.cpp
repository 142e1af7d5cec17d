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

#include "stabkit/code_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace stabkit {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

}  // namespace

StabilizerCode parse_code(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t n = 0, k = 0;
  bool have_header = false;
  std::vector<PauliOperator> gens;
  std::vector<PauliOperator> lx, lz;
  int section = 0;  // 0 = generators, 1 = LX, 2 = LZ

  while (std::getline(in, line)) {
    line = clean_line(line);
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string ntok, ktok;
      hs >> ntok >> ktok;
      if (ntok.rfind("n=", 0) != 0 || ktok.rfind("k=", 0) != 0) {
        throw std::invalid_argument("code file must start with 'n=<int> k=<int>'");
      }
      n = std::stoul(ntok.substr(2));
      k = std::stoul(ktok.substr(2));
      if (k > n) throw std::invalid_argument("k may not exceed n");
      have_header = true;
      continue;
    }
    if (line == "LX:") {
      section = 1;
      continue;
    }
    if (line == "LZ:") {
      section = 2;
      continue;
    }
    PauliOperator p = PauliOperator::parse(line);
    if (p.num_qubits() != n) {
      throw std::invalid_argument("pauli string length differs from n: " + line);
    }
    if (section == 0) {
      gens.push_back(std::move(p));
    } else if (section == 1) {
      lx.push_back(std::move(p));
    } else {
      lz.push_back(std::move(p));
    }
  }
  if (!have_header) throw std::invalid_argument("empty code file");
  if (gens.size() != n - k) {
    throw std::invalid_argument("expected " + std::to_string(n - k) + " generators, got " +
                                std::to_string(gens.size()));
  }
  StabilizerCode code(name, n, std::move(gens));
  if (!lx.empty() || !lz.empty()) {
    if (lx.size() != k || lz.size() != k) {
      throw std::invalid_argument("LX:/LZ: sections must each have k entries");
    }
    code.set_logicals(std::move(lx), std::move(lz));
  }
  return code;
}

StabilizerCode parse_code_string(const std::string& text, const std::string& name) {
  std::istringstream ss(text);
  return parse_code(ss, name);
}

std::string format_code(const StabilizerCode& code) {
  std::string out = "n=" + std::to_string(code.num_qubits()) +
                    " k=" + std::to_string(code.num_logical()) + "\n";
  for (const auto& g : code.generators()) out += g.to_string() + "\n";
  if (!code.logical_x().empty()) {
    out += "LX:\n";
    for (const auto& p : code.logical_x()) out += p.to_string() + "\n";
    out += "LZ:\n";
    for (const auto& p : code.logical_z()) out += p.to_string() + "\n";
  }
  return out;
}

GF2Matrix parse_matrix(std::istream& in) {
  std::vector<BitVector> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = clean_line(line);
    if (line.empty()) continue;
    std::vector<bool> bits;
    for (char c : line) {
      if (c == '0') {
        bits.push_back(false);
      } else if (c == '1') {
        bits.push_back(true);
      } else if (c == ' ' || c == '\t') {
        continue;
      } else {
        throw std::invalid_argument(std::string("invalid matrix character '") + c + "'");
      }
    }
    BitVector row(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) row.set(i, bits[i]);
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("ragged matrix rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix file");
  return GF2Matrix(std::move(rows));
}

GF2Matrix parse_matrix_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_matrix(ss);
}

std::string format_matrix(const GF2Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    out += m.row(r).to_string();
    out += '\n';
  }
  return out;
}

}  // namespace stabkit
