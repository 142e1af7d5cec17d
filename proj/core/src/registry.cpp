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

#include "stabkit/registry.hpp"

#include <array>

namespace stabkit {

namespace {

StabilizerCode make_code(const char* name, std::initializer_list<const char*> rows) {
  std::vector<PauliOperator> gens;
  std::size_t n = 0;
  for (const char* r : rows) {
    gens.push_back(PauliOperator::parse(r));
    n = gens.back().num_qubits();
  }
  return with_logicals(StabilizerCode(name, n, std::move(gens)));
}

}  // namespace

const StabilizerCode& five_qubit_code() {
  static const StabilizerCode code = make_code("five_qubit", {
                                                                 "XZZXI",
                                                                 "IXZZX",
                                                                 "XIXZZ",
                                                                 "ZXIXZ",
                                                             });
  return code;
}

const StabilizerCode& steane_code() {
  static const StabilizerCode code = make_code("seven_qubit", {
                                                                  "ZZZZIII",
                                                                  "ZZIIZZI",
                                                                  "ZIZIZIZ",
                                                                  "XXXXIII",
                                                                  "XXIIXXI",
                                                                  "XIXIXIX",
                                                              });
  return code;
}

const StabilizerCode& shor_code() {
  static const StabilizerCode code = make_code("nine_qubit", {
                                                                 "ZZIIIIIII",
                                                                 "IZZIIIIII",
                                                                 "IIIZZIIII",
                                                                 "IIIIZZIII",
                                                                 "IIIIIIZZI",
                                                                 "IIIIIIIZZ",
                                                                 "XXXXXXIII",
                                                                 "IIIXXXXXX",
                                                             });
  return code;
}

StabilizerCode trivial_code(std::size_t n) {
  StabilizerCode code("trivial", n, {});
  std::vector<PauliOperator> lx, lz;
  for (std::size_t q = 0; q < n; ++q) {
    lx.push_back(PauliOperator::single(n, q, 'X'));
    lz.push_back(PauliOperator::single(n, q, 'Z'));
  }
  code.set_logicals(std::move(lx), std::move(lz));
  return code;
}

const StabilizerCode* find_code(const std::string& name) {
  if (name == "five_qubit" || name == "five" || name == "5q" || name == "perfect5") {
    return &five_qubit_code();
  }
  if (name == "seven_qubit" || name == "steane7" || name == "steane" || name == "7q") {
    return &steane_code();
  }
  if (name == "nine_qubit" || name == "shor9" || name == "shor" || name == "9q") {
    return &shor_code();
  }
  return nullptr;
}

std::vector<std::string> bundled_code_names() { return {"five_qubit", "seven_qubit", "nine_qubit"}; }

bool has_transversal_h_p(const StabilizerCode& code) { return code.name() == "seven_qubit"; }

const ClassicalLinearCode& hamming_7_4() {
  static const ClassicalLinearCode code = [] {
    GF2Matrix h(3, 7);
    const std::array<const char*, 3> rows = {"1111000", "1100110", "1010101"};
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < 7; ++c) h.set(r, c, rows[r][c] == '1');
    }
    return ClassicalLinearCode(std::move(h), "hamming_7_4");
  }();
  return code;
}

}  // namespace stabkit
