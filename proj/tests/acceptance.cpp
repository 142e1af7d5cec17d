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

// Acceptance suite: one pass/fail line per criterion. Run with no
// arguments for everything, or list criterion numbers to select.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stabkit/bounds.hpp"
#include "stabkit/exrec.hpp"
#include "stabkit/knill_laflamme.hpp"
#include "stabkit/monte_carlo.hpp"
#include "stabkit/registry.hpp"
#include "stabkit/report_io.hpp"
#include "stabkit/simulate.hpp"
#include "stabkit/teleport.hpp"
#include "stabkit/threshold.hpp"

#ifndef STABKIT_CLI_PATH
#define STABKIT_CLI_PATH "stabkit"
#endif

namespace {

using namespace stabkit;
using Clock = std::chrono::steady_clock;

std::size_t g_jobs = 8;

struct Criterion {
  int number;
  std::string label;
  std::function<bool(std::string&)> run;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  const std::string cmd = std::string(STABKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

bool criterion_1(std::string& note) {
  bool ok = true;
  std::ostringstream msg;
  struct Case {
    const StabilizerCode* code;
    std::size_t expect;
  };
  for (const Case c : {Case{&five_qubit_code(), 3}, Case{&steane_code(), 3},
                       Case{&shor_code(), 3}}) {
    const auto start = Clock::now();
    const std::size_t d = c.code->distance();
    const double dt = seconds_since(start);
    msg << c.code->name() << ": d=" << d << " (" << format_double(dt) << " s)  ";
    ok &= d == c.expect && dt < 1.0;
  }
  note = msg.str();
  return ok;
}

bool criterion_2(std::string& note) {
  const auto start = Clock::now();
  const auto five = verify_knill_laflamme(five_qubit_code(), weight_one_errors(5));
  const auto nine = verify_knill_laflamme(shor_code(), weight_one_errors(9));
  const double dt = seconds_since(start);
  std::ostringstream msg;
  msg << "five: code=" << five.is_code << " degenerate=" << five.is_degenerate
      << "; nine: code=" << nine.is_code << " degenerate=" << nine.is_degenerate << " ("
      << format_double(dt) << " s)";
  note = msg.str();
  return five.is_code && !five.is_degenerate && nine.is_code && nine.is_degenerate &&
         five.max_residual <= 1e-10 && nine.max_residual <= 1e-10 && dt < 10.0;
}

bool criterion_3(std::string& note) {
  const bool h = hamming_bound(5, 1, 1) && hamming_bound_equality(5, 1, 1);
  const bool s = !singleton_bound(4, 1, 3);
  const bool g = !gv_bound(9, 1, 3);
  note = "hamming(5,1,1) equality; singleton(4,1,3) violated; gv(9,1,3) not guaranteed";
  return h && s && g && pauli_sphere_size(5, 1) * 2 == BigInt(32);
}

bool criterion_4(std::string& note) {
  const auto start = Clock::now();
  std::mt19937_64 gen_rng(20260811);
  std::size_t deterministic = 0, randoms = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + gen_rng() % 7;  // up to 8 qubits
    const Circuit c = random_clifford_circuit(n, 50, 3, gen_rng);
    const auto cmp = clifford_vs_dense_check(c, 555 + trial);
    deterministic += cmp.deterministic_checked;
    randoms += cmp.measurements_checked - cmp.deterministic_checked;
    if (!cmp.agree) {
      note = "mismatch on circuit " + std::to_string(trial) + ": " + cmp.first_mismatch;
      return false;
    }
  }
  const double dt = seconds_since(start);
  note = "100 circuits, " + std::to_string(deterministic) + " deterministic and " +
         std::to_string(randoms) + " random outcomes agree (" + format_double(dt) + " s)";
  return dt < 60.0;
}

bool criterion_5(std::string& note) {
  const auto start = Clock::now();
  const auto& code = steane_code();
  std::ostringstream msg;
  bool ok = true;
  std::uint64_t cases = 0;

  auto check = [&](const Gadget& g, GadgetProperty property, char basis,
                   const std::string& gate) {
    GadgetCheckOptions opt;
    opt.fault_budget = 1;
    opt.input_weight = 1;
    opt.t = 1;
    opt.jobs = g_jobs;
    opt.prep_basis = basis;
    opt.ideal_gate = gate;
    const auto report = check_property(g, property, opt);
    cases += report.cases_checked;
    if (!report.passed) {
      msg << g.name << "/" << property_name(property) << " FAILED: " << report.detail << " ["
          << report.counterexample.to_string() << "]  ";
      ok = false;
    }
    return report;
  };

  const Gadget ec = steane_ec(code);
  check(ec, GadgetProperty::kEcA, '0', "I");
  check(ec, GadgetProperty::kEcB, '0', "I");
  const Gadget cnot = transversal_gate(code, "CNOT");
  check(cnot, GadgetProperty::kGateA, '0', "CNOT");
  check(cnot, GadgetProperty::kGateB, '0', "CNOT");
  const Gadget p0 = prep_logical(code, '0', PrepStrategy::kVerifyDiscard);
  check(p0, GadgetProperty::kPrepA, '0', "I");
  check(p0, GadgetProperty::kPrepB, '0', "I");
  const Gadget pp = prep_logical(code, '+', PrepStrategy::kVerifyDiscard);
  check(pp, GadgetProperty::kPrepA, '+', "I");
  check(pp, GadgetProperty::kPrepB, '+', "I");

  const double dt = seconds_since(start);
  msg << cases << " cases, zero counterexamples (" << format_double(dt) << " s, jobs="
      << g_jobs << ")";
  note = msg.str();
  return ok && dt < 600.0;
}

bool criterion_6(std::string& note) {
  const auto start = Clock::now();
  const auto report = check_steane_support_claim(steane_ec(steane_code()));
  const double dt = seconds_since(start);
  note = std::to_string(report.patterns_checked) + " single-fault patterns, " +
         std::to_string(report.rejected) + " rejected, " +
         std::to_string(report.violations.size()) + " violations (" + format_double(dt) + " s)";
  if (!report.violations.empty()) note += " first: " + report.violations.front();
  return report.violations.empty() && report.patterns_checked > 0;
}

bool criterion_7(std::string& note) {
  const auto start = Clock::now();
  const auto report = check_pi8_teleportation(steane_code(), 1e-9);
  const double dt = seconds_since(start);
  note = "6 input/branch cases, min fidelity " + format_double(report.min_fidelity) + " (" +
         format_double(dt) + " s)";
  return report.passed && dt < 60.0;
}

bool criterion_8(std::string& note) {
  const auto start = Clock::now();
  const auto harness = make_cnot_exrec(steane_code());
  const auto report = check_exrec_single_faults(harness, 1, g_jobs);
  const double dt = seconds_since(start);
  note = std::to_string(report.cases_checked) + " cases over " +
         std::to_string(harness.full.circuit.locations.size()) + " locations, " +
         std::to_string(report.failures) + " logical failures (" + format_double(dt) + " s)";
  if (report.failures > 0) note += " first: " + report.detail;
  return report.failures == 0 && dt < 600.0;
}

bool criterion_9(std::string& note) {
  const auto start = Clock::now();
  const auto harness = make_cnot_exrec(steane_code());
  std::ostringstream msg;
  bool ok = true;

  // Malignant-pair prediction for the quadratic coefficient.
  const auto mal = malignant_count(harness, g_jobs);
  msg << "malignant pairs " << mal.malignant_pairs << "/" << mal.fault_sets.str()
      << " (weighted " << format_double(mal.weighted_pairs) << "); ";

  // 20-point log grid, 1e6 trials per point.
  const std::uint64_t trials = 1000000;
  std::vector<ThresholdPoint> points;
  for (int i = 0; i < 20; ++i) {
    ThresholdPoint pt;
    pt.p = 1e-5 * std::pow(10.0, 4.0 * i / 19.0);
    pt.report = simulate_exrec(harness, NoiseModel::depolarizing(pt.p), split_seed(2026, i),
                               trials, g_jobs);
    points.push_back(pt);
  }

  // Monotone in p, allowing statistical ties: no significant reversal
  // between neighbors (the 95% intervals must not certify a decrease).
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i].report.wilson_lo > points[i + 1].report.wilson_hi) {
      msg << "non-monotone at p=" << format_double(points[i].p) << "; ";
      ok = false;
    }
  }

  // Quadratic fit over the low-p points with enough statistics.
  std::vector<std::pair<double, double>> low;
  for (const auto& pt : points) {
    if (pt.p <= 1e-3 && pt.report.failures >= 10) low.push_back({pt.p, pt.report.failure_rate});
  }
  const auto fit = fit_power_law(low, 2.0);
  msg << "fit c=" << format_double(fit.c) << " r2=" << format_double(fit.r_squared) << " on "
      << fit.points_used << " points; ";
  if (fit.points_used < 3 || fit.r_squared < 0.98) ok = false;
  const double ratio = fit.c / mal.weighted_pairs;
  msg << "c/prediction=" << format_double(ratio) << "; ";
  if (!(ratio > 1.0 / 3.0 && ratio < 3.0)) ok = false;

  // Pseudo-threshold crossing with separated intervals.
  double below = 0, above = 0;
  for (const auto& pt : points) {
    if (pt.report.wilson_hi < pt.p) below = pt.p;
    if (above == 0 && pt.report.wilson_lo > pt.p) above = pt.p;
  }
  if (below > 0 && above > below) {
    msg << "crossing in (" << format_double(below) << ", " << format_double(above) << ")";
  } else {
    msg << "no certified crossing";
    ok = false;
  }

  const double dt = seconds_since(start);
  msg << " (" << format_double(dt) << " s)";
  note = msg.str();
  return ok && dt < 7200.0;
}

bool criterion_10(std::string& note) {
  // Worked example: t=1, p_T=1e-3, p=1e-4, eps1=1e-15 gives L=4.
  if (levels_needed(1e-15, 1e-4, 1e-3, 1) != 4) {
    note = "worked example did not give L=4";
    return false;
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double pt = std::pow(10.0, -1.0 - 3.0 * dist(rng));
    const double p = pt * (0.05 + 0.9 * dist(rng));
    const double eps1 = p * std::pow(10.0, -1.0 - 10.0 * dist(rng));
    if (eps1 >= pt) continue;
    const std::size_t t = 1 + (rng() % 2);
    const double a = std::pow(pt, -static_cast<double>(t));
    const std::size_t levels = levels_needed(eps1, p, pt, t);
    const auto seq = level_reduction_bound(p, a, t, levels);
    if (seq.levels.back() > eps1 * (1 + 1e-9)) {
      note = "recursion disagrees with levels_needed";
      return false;
    }
  }
  note = "worked example L=4; 20 random draws satisfy p(L) <= eps1";
  return true;
}

bool criterion_11(std::string& note) {
  std::ostringstream msg;
  bool ok = true;
  const std::vector<std::string> commands = {
      "code distance --code five_qubit",
      "code syndrome --code five_qubit --error XIIII",
      "code bound-table --max-n 8 --max-k 2",
      "code logicals --code seven_qubit",
      "css build --c1 hamming_7_4 --c2 hamming_7_4",
      "sim run --circuit " + std::string(STABKIT_ACCEPT_DIR) + "/bell.circ --shots 5 --seed 42",
      "sim run --circuit " + std::string(STABKIT_ACCEPT_DIR) +
          "/bell.circ --shots 5 --seed 42 --engine dense",
      "ft check --code steane7 --gadget transversal-cnot --property gatea --t 1 --jobs 2",
      "ft count --code steane7 --exrec cnot",
      "ft threshold --code steane7 --exrec cnot --noise depolarizing "
      "--p-grid 1e-3:1e-2:log3 --trials 2000 --seed 42 --jobs 2",
      "ft levels --p 1e-4 --p-threshold 1e-3 --epsilon 1e-15 --g 10",
  };
  for (const auto& cmd : commands) {
    int code1 = 0, code2 = 0;
    const std::string a = run_cli(cmd, &code1);
    const std::string b = run_cli(cmd, &code2);
    if (a != b || code1 != code2) {
      msg << "NONDETERMINISTIC: " << cmd << "  ";
      ok = false;
    }
  }
  msg << commands.size() << " subcommands byte-identical across repeats";
  note = msg.str();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--jobs=", 0) == 0) {
      g_jobs = std::stoul(arg.substr(7));
    } else {
      selected.insert(std::stoi(arg));
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "code distances [[5,1,3]], [[7,1,3]], [[9,1,3]]", criterion_1},
      {2, "Knill-Laflamme: five nondegenerate, nine degenerate", criterion_2},
      {3, "counting bounds: Hamming equality, Singleton and GV verdicts", criterion_3},
      {4, "tableau vs dense oracle on 100 random Clifford circuits", criterion_4},
      {5, "exhaustive gadget properties at t=1 on the seven-qubit code", criterion_5},
      {6, "Steane EC residual support inside the fault columns", criterion_6},
      {7, "pi/8 gate teleportation reproduces the logical rotation", criterion_7},
      {8, "good-implies-correct: single faults over the CNOT ExRec", criterion_8},
      {9, "threshold behavior of the CNOT ExRec under depolarizing noise", criterion_9},
      {10, "analytic level reduction and levels_needed agree", criterion_10},
      {11, "seeded runs are byte-identical for every subcommand", criterion_11},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    std::string note;
    bool pass = false;
    try {
      pass = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", c.number,
                c.label.c_str(), note.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
