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

#include <cstdio>
#include <fstream>
#include <string>

#include "stabkit/circuit.hpp"
#include "stabkit/code_io.hpp"
#include "stabkit/report_io.hpp"

#ifndef STABKIT_CLI_PATH
#define STABKIT_CLI_PATH "stabkit"
#endif

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  const std::string cmd = std::string(STABKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

}  // namespace

TEST_CASE("cli: code distance prints 3 for the bundled codes") {
  for (const char* name : {"five_qubit", "steane7", "shor9"}) {
    int code = -1;
    CHECK(run_cli(std::string("code distance --code ") + name, &code) == "3\n");
    CHECK(code == 0);
  }
}

TEST_CASE("cli: syndrome of X on the first qubit") {
  int code = -1;
  CHECK(run_cli("code syndrome --code five_qubit --error XIIII", &code) == "0001\n");
  CHECK(code == 0);
}

TEST_CASE("cli: code check rejects a bad file with exit 1") {
  const std::string path = std::string(STABKIT_TMP_DIR) + "/bad.stab";
  std::ofstream(path) << "n=2 k=0\n+XX\n+ZI\n";  // anticommuting pair
  int code = -1;
  const std::string out = run_cli("code check --file " + path, &code);
  CHECK(code == 1);
  CHECK(out.find("violation") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 2") {
  int code = -1;
  run_cli("code distance --no-such-flag", &code);
  CHECK(code == 2);
  run_cli("frobnicate", &code);
  CHECK(code == 2);
}

TEST_CASE("cli: css build emits a parseable [[7,1]] code") {
  const std::string path = std::string(STABKIT_TMP_DIR) + "/steane_built.stab";
  int code = -1;
  const std::string out =
      run_cli("css build --c1 hamming_7_4 --c2 hamming_7_4 --out " + path, &code);
  CHECK(code == 0);
  CHECK(out.find("[[7,1]]") != std::string::npos);
  CHECK(out.find("enumerated distance 3") != std::string::npos);
  std::ifstream in(path);
  REQUIRE(in.good());
  const auto parsed = stabkit::parse_code(in);
  CHECK(parsed.num_qubits() == 7);
  CHECK(parsed.validate().empty());
}

TEST_CASE("cli: build-gadget output parses as a circuit") {
  int code = -1;
  const std::string out = run_cli("ft build-gadget --code steane7 --gadget steane-ec", &code);
  CHECK(code == 0);
  const auto circuit = stabkit::parse_circuit_string(out);
  CHECK(circuit.n_qubits > 7);
  CHECK(circuit.num_measurements() >= 14);
}

TEST_CASE("cli: threshold CSV round-trips through the parser") {
  const std::string path = std::string(STABKIT_TMP_DIR) + "/grid.csv";
  int code = -1;
  run_cli("ft threshold --code steane7 --exrec wait --p-grid 1e-3:1e-2:log3 "
          "--trials 500 --seed 9 --jobs 2 --out " +
              path,
          &code);
  CHECK(code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto points = stabkit::parse_threshold_csv(text);
  REQUIRE(points.size() == 3);
  CHECK(points[0].p == doctest::Approx(1e-3));
  CHECK(points[2].p == doctest::Approx(1e-2));
  CHECK(stabkit::threshold_csv(points) == text);
  for (const auto& pt : points) {
    CHECK(pt.report.trials == 500);
    CHECK(pt.report.wilson_lo <= pt.report.failure_rate);
    CHECK(pt.report.failure_rate <= pt.report.wilson_hi);
  }
}

TEST_CASE("cli: ft check emits a failing report with a counterexample for s=2 EC B") {
  // Two faults exceed t=1, so EC B must fail and carry a replayable pattern.
  int code = -1;
  const std::string out = run_cli(
      "ft check --code steane7 --gadget steane-ec --property ecb --t 2 --s 2 --r 0 --jobs 2",
      &code);
  // t=2 makes the budget authentic: the seven-qubit code cannot correct two
  // errors, so a counterexample is expected and exit code 1 reports it.
  CHECK(code == 1);
  CHECK(out.find("\"passed\": false") != std::string::npos);
  CHECK(out.find("counterexample") != std::string::npos);
}

TEST_CASE("cli: dense engine handles T gates that the tableau rejects") {
  const std::string path = std::string(STABKIT_TMP_DIR) + "/tgate.circ";
  std::ofstream(path) << "QUBITS 1\nH 0\nT 0\nTDG 0\nH 0\nMEAS Z\n";
  int code = -1;
  const std::string dense = run_cli("sim run --circuit " + path + " --engine dense --seed 3",
                                    &code);
  CHECK(code == 0);
  CHECK(dense == "0\n");  // H T Tdg H = identity on |0>
  run_cli("sim run --circuit " + path + " --engine tableau --seed 3", &code);
  CHECK(code == 1);
}
