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

#include "stabkit/circuit.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace stabkit {

std::vector<std::size_t> Location::qubits() const {
  switch (kind) {
    case Kind::kCnot:
      return {q0, q1};
    case Kind::kMeasure: {
      std::vector<std::size_t> qs;
      for (std::size_t q = 0; q < measured.num_qubits(); ++q) {
        if (measured.x_bit(q) || measured.z_bit(q)) qs.push_back(q);
      }
      return qs;
    }
    default:
      return {q0};
  }
}

std::string Location::to_string() const {
  switch (kind) {
    case Kind::kPrep:
      return "PREP " + std::to_string(q0) + " " + prep_basis;
    case Kind::kH:
      return "H " + std::to_string(q0);
    case Kind::kP:
      return "P " + std::to_string(q0);
    case Kind::kPDag:
      return "PDG " + std::to_string(q0);
    case Kind::kX:
      return "X " + std::to_string(q0);
    case Kind::kY:
      return "Y " + std::to_string(q0);
    case Kind::kZ:
      return "Z " + std::to_string(q0);
    case Kind::kT:
      return "T " + std::to_string(q0);
    case Kind::kTDag:
      return "TDG " + std::to_string(q0);
    case Kind::kCnot:
      return "CNOT " + std::to_string(q0) + " " + std::to_string(q1);
    case Kind::kMeasure: {
      // The sign prefix is dropped: measurements are of the unsigned
      // operator.
      std::string s = measured.to_string();
      return "MEAS " + s.substr(s.find_first_of("IXYZ"));
    }
    case Kind::kWait:
      return "WAIT " + std::to_string(q0);
  }
  return "";
}

std::size_t Circuit::num_measurements() const {
  std::size_t c = 0;
  for (const auto& loc : locations) {
    if (loc.kind == Location::Kind::kMeasure) ++c;
  }
  return c;
}

bool Circuit::is_clifford_only() const {
  for (const auto& loc : locations) {
    if (!loc.is_clifford()) return false;
  }
  return true;
}

namespace {

Location simple(Location::Kind kind, std::size_t q) {
  Location loc;
  loc.kind = kind;
  loc.q0 = q;
  return loc;
}

}  // namespace

Circuit& Circuit::prep(std::size_t q, char basis) {
  Location loc = simple(Location::Kind::kPrep, q);
  loc.prep_basis = basis;
  locations.push_back(loc);
  return *this;
}
Circuit& Circuit::h(std::size_t q) {
  locations.push_back(simple(Location::Kind::kH, q));
  return *this;
}
Circuit& Circuit::p(std::size_t q) {
  locations.push_back(simple(Location::Kind::kP, q));
  return *this;
}
Circuit& Circuit::p_dagger(std::size_t q) {
  locations.push_back(simple(Location::Kind::kPDag, q));
  return *this;
}
Circuit& Circuit::x(std::size_t q) {
  locations.push_back(simple(Location::Kind::kX, q));
  return *this;
}
Circuit& Circuit::y(std::size_t q) {
  locations.push_back(simple(Location::Kind::kY, q));
  return *this;
}
Circuit& Circuit::z(std::size_t q) {
  locations.push_back(simple(Location::Kind::kZ, q));
  return *this;
}
Circuit& Circuit::t(std::size_t q) {
  locations.push_back(simple(Location::Kind::kT, q));
  return *this;
}
Circuit& Circuit::t_dagger(std::size_t q) {
  locations.push_back(simple(Location::Kind::kTDag, q));
  return *this;
}
Circuit& Circuit::cnot(std::size_t c, std::size_t t) {
  Location loc;
  loc.kind = Location::Kind::kCnot;
  loc.q0 = c;
  loc.q1 = t;
  locations.push_back(loc);
  return *this;
}
Circuit& Circuit::measure(const PauliOperator& m) {
  if (m.num_qubits() != n_qubits) throw DimensionError("measured pauli length differs");
  Location loc;
  loc.kind = Location::Kind::kMeasure;
  loc.measured = m;
  locations.push_back(loc);
  return *this;
}
Circuit& Circuit::measure_z(std::size_t q) {
  return measure(PauliOperator::single(n_qubits, q, 'Z'));
}
Circuit& Circuit::measure_x(std::size_t q) {
  return measure(PauliOperator::single(n_qubits, q, 'X'));
}
Circuit& Circuit::wait(std::size_t q) {
  locations.push_back(simple(Location::Kind::kWait, q));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits) throw DimensionError("circuit qubit counts differ");
  locations.insert(locations.end(), other.locations.begin(), other.locations.end());
  return *this;
}

std::string Circuit::to_string() const {
  std::string out = "QUBITS " + std::to_string(n_qubits) + "\n";
  for (const auto& loc : locations) {
    out += loc.to_string();
    out += '\n';
  }
  return out;
}

Circuit parse_circuit(std::istream& in) {
  Circuit c;
  std::string line;
  bool have_header = false;
  std::size_t max_qubit = 0;
  std::vector<Location> pending;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    if (op == "QUBITS") {
      std::size_t n;
      if (!(ls >> n)) throw std::invalid_argument("QUBITS needs a count");
      c.n_qubits = n;
      have_header = true;
      continue;
    }
    Location loc;
    auto read_q = [&](std::size_t& q) {
      if (!(ls >> q)) throw std::invalid_argument("missing qubit index in: " + line);
      max_qubit = std::max(max_qubit, q);
    };
    if (op == "PREP") {
      loc.kind = Location::Kind::kPrep;
      read_q(loc.q0);
      std::string basis;
      if (!(ls >> basis) || (basis != "0" && basis != "+")) {
        throw std::invalid_argument("PREP basis must be 0 or +");
      }
      loc.prep_basis = basis[0];
    } else if (op == "H") {
      loc.kind = Location::Kind::kH;
      read_q(loc.q0);
    } else if (op == "P") {
      loc.kind = Location::Kind::kP;
      read_q(loc.q0);
    } else if (op == "PDG") {
      loc.kind = Location::Kind::kPDag;
      read_q(loc.q0);
    } else if (op == "X" || op == "Y" || op == "Z") {
      loc.kind = op == "X" ? Location::Kind::kX
                           : (op == "Y" ? Location::Kind::kY : Location::Kind::kZ);
      read_q(loc.q0);
    } else if (op == "T") {
      loc.kind = Location::Kind::kT;
      read_q(loc.q0);
    } else if (op == "TDG") {
      loc.kind = Location::Kind::kTDag;
      read_q(loc.q0);
    } else if (op == "CNOT") {
      loc.kind = Location::Kind::kCnot;
      read_q(loc.q0);
      read_q(loc.q1);
    } else if (op == "MEAS") {
      loc.kind = Location::Kind::kMeasure;
      std::string pauli;
      if (!(ls >> pauli)) throw std::invalid_argument("MEAS needs a pauli string");
      loc.measured = PauliOperator::parse(pauli);
    } else if (op == "WAIT") {
      loc.kind = Location::Kind::kWait;
      read_q(loc.q0);
    } else {
      throw std::invalid_argument("unknown instruction: " + op);
    }
    pending.push_back(std::move(loc));
  }
  if (!have_header) c.n_qubits = pending.empty() ? 0 : max_qubit + 1;
  for (auto& loc : pending) {
    if (loc.kind == Location::Kind::kMeasure) {
      if (loc.measured.num_qubits() != c.n_qubits) {
        throw std::invalid_argument("MEAS pauli length differs from qubit count");
      }
    } else if (loc.q0 >= c.n_qubits || (loc.is_two_qubit() && loc.q1 >= c.n_qubits)) {
      throw std::invalid_argument("qubit index out of range");
    }
  }
  c.locations = std::move(pending);
  return c;
}

Circuit parse_circuit_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_circuit(ss);
}

}  // namespace stabkit
