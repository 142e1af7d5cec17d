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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "stabkit/bounds.hpp"
#include "stabkit/code_io.hpp"
#include "stabkit/css.hpp"
#include "stabkit/exrec.hpp"
#include "stabkit/knill_laflamme.hpp"
#include "stabkit/monte_carlo.hpp"
#include "stabkit/registry.hpp"
#include "stabkit/report_io.hpp"
#include "stabkit/simulate.hpp"
#include "stabkit/teleport.hpp"
#include "stabkit/threshold.hpp"

namespace {

using namespace stabkit;

// Exit codes: 0 success, 1 domain error, 2 usage error.
constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::size_t dense_limit = 16;
  std::uint64_t enumeration_cap = 1'000'000'000;
  std::string out_path;
};

std::size_t dense_limit_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("STABKIT_DENSE_LIMIT")) {
    return static_cast<std::size_t>(std::stoul(env));
  }
  return fallback;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.out_path);
  out << text;
}

StabilizerCode load_code(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read " + file);
    return with_logicals(parse_code(in, file));
  }
  const StabilizerCode* bundled = find_code(name);
  if (!bundled) throw std::runtime_error("unknown code '" + name + "'");
  return *bundled;
}

ClassicalLinearCode load_classical(const std::string& path) {
  if (path == "hamming_7_4" || path == "hamming") return hamming_7_4();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return ClassicalLinearCode(parse_matrix(in), path);
}

Gadget build_gadget(const StabilizerCode& code, const std::string& name) {
  if (name == "steane-ec") return steane_ec(code);
  if (name == "shor-ec") return shor_ec(code, 3);
  if (name == "knill-ec") return knill_ec(code);
  if (name == "prep-zero" || name == "prep0") {
    return prep_logical(code, '0', PrepStrategy::kVerifyDiscard);
  }
  if (name == "prep-plus") return prep_logical(code, '+', PrepStrategy::kVerifyDiscard);
  if (name == "prep-zero-project") return prep_logical(code, '0', PrepStrategy::kShorProject);
  if (name == "prep-plus-project") return prep_logical(code, '+', PrepStrategy::kShorProject);
  if (name == "transversal-cnot" || name == "cnot") return transversal_gate(code, "CNOT");
  if (name == "transversal-h") return transversal_gate(code, "H");
  if (name == "transversal-p") return transversal_gate(code, "P");
  if (name == "logical-x") return transversal_gate(code, "X");
  if (name == "logical-z") return transversal_gate(code, "Z");
  if (name == "measure-z") return measure_logical_z(code);
  if (name.rfind("cat-", 0) == 0) return cat_state_circuit(std::stoul(name.substr(4)));
  throw std::runtime_error("unknown gadget '" + name + "'");
}

char default_prep_basis(const std::string& gadget_name) {
  return gadget_name.find("plus") != std::string::npos ? '+' : '0';
}

std::string default_ideal_gate(const std::string& gadget_name) {
  if (gadget_name.find("cnot") != std::string::npos) return "CNOT";
  if (gadget_name == "transversal-h") return "H";
  if (gadget_name == "transversal-p") return "P";
  return "I";
}

std::vector<double> parse_grid(const std::string& spec) {
  // "1e-5:1e-1:log20" or "0.01:0.05:lin5".
  const auto c1 = spec.find(':'), c2 = spec.rfind(':');
  if (c1 == std::string::npos || c2 == c1) throw std::runtime_error("bad grid spec " + spec);
  const double lo = std::stod(spec.substr(0, c1));
  const double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  const std::string kind = spec.substr(c2 + 1);
  bool log_scale = true;
  std::size_t count = 0;
  if (kind.rfind("log", 0) == 0) {
    count = std::stoul(kind.substr(3));
  } else if (kind.rfind("lin", 0) == 0) {
    log_scale = false;
    count = std::stoul(kind.substr(3));
  } else {
    throw std::runtime_error("grid kind must be logN or linN");
  }
  if (count < 2) throw std::runtime_error("grid needs at least 2 points");
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    grid[i] = log_scale ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
  }
  return grid;
}

ExRecHarness build_exrec(const StabilizerCode& code, const std::string& name) {
  if (name == "cnot") return make_cnot_exrec(code);
  return make_gate_exrec(code, name == "h" ? "H" : name == "p" ? "P" : name == "wait" ? "WAIT"
                                                                                      : name);
}

int run_code_check(const RunConfig& cfg, const std::string& name, const std::string& file) {
  (void)cfg;
  const auto code = load_code(name, file);
  const auto violations = code.validate();
  if (violations.empty()) {
    std::cout << "ok: " << code.name() << " is a valid [[" << code.num_qubits() << ","
              << code.num_logical() << "]] stabilizer code\n";
    return kOk;
  }
  for (const auto& v : violations) std::cout << "violation: " << v.detail << "\n";
  return kDomainError;
}

int run_threshold(const RunConfig& cfg, const StabilizerCode& code, const std::string& exrec_name,
                  const std::string& noise_name, const std::string& grid_spec,
                  std::uint64_t trials, bool fit) {
  if (noise_name != "depolarizing") throw std::runtime_error("unsupported noise family");
  const auto harness = build_exrec(code, exrec_name);
  const auto grid = parse_grid(grid_spec);
  std::vector<ThresholdPoint> points;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ThresholdPoint pt;
    pt.p = grid[i];
    pt.report = simulate_exrec(harness, NoiseModel::depolarizing(grid[i]),
                               split_seed(cfg.seed, i), trials, cfg.jobs);
    points.push_back(pt);
  }
  std::string out = threshold_csv(points);
  if (fit) {
    std::vector<std::pair<double, double>> low;
    for (const auto& pt : points) {
      if (pt.p <= 1e-3 && pt.report.failures >= 10) low.push_back({pt.p, pt.report.failure_rate});
    }
    const auto f = fit_power_law(low, 2.0);
    out += "# fit c*p^2: c=" + format_double(f.c) + " r2=" + format_double(f.r_squared) +
           " points=" + std::to_string(f.points_used) + "\n";
  }
  write_output(cfg, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabkit: stabilizer code and fault-tolerance toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "master seed for all randomness");
  app.add_option("--jobs", cfg.jobs, "worker threads");
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  cfg.dense_limit = dense_limit_from_env(16);

  std::string code_name = "seven_qubit", code_file;
  auto add_code_opts = [&](CLI::App* cmd) {
    cmd->add_option("--code", code_name, "bundled code name");
    cmd->add_option("--file", code_file, "stabilizer code file");
  };

  // ---- code ----
  auto* code_cmd = app.add_subcommand("code", "stabilizer code analysis");
  code_cmd->require_subcommand(1);

  auto* code_check = code_cmd->add_subcommand("check", "validate a code");
  add_code_opts(code_check);

  auto* code_distance = code_cmd->add_subcommand("distance", "exact minimum distance");
  add_code_opts(code_distance);

  std::string error_string;
  auto* code_syndrome = code_cmd->add_subcommand("syndrome", "syndrome of a Pauli error");
  add_code_opts(code_syndrome);
  code_syndrome->add_option("--error", error_string, "Pauli string")->required();

  auto* code_logicals = code_cmd->add_subcommand("logicals", "logical operator representatives");
  add_code_opts(code_logicals);

  std::uint64_t bn = 5, bk = 1, bt = 1, bd = 3;
  auto* code_bounds = code_cmd->add_subcommand("bounds", "counting bound verdicts");
  code_bounds->add_option("--n", bn)->required();
  code_bounds->add_option("--k", bk)->required();
  code_bounds->add_option("--t", bt, "correctable errors (hamming bound)");
  code_bounds->add_option("--d", bd, "distance (gv / singleton bounds)");

  std::uint64_t table_n = 10, table_k = 2;
  auto* bound_table = code_cmd->add_subcommand("bound-table", "bound verdicts for small codes");
  bound_table->add_option("--max-n", table_n);
  bound_table->add_option("--max-k", table_k);

  auto* code_kl = code_cmd->add_subcommand("kl", "Knill-Laflamme check on weight-1 errors");
  add_code_opts(code_kl);

  // ---- css ----
  auto* css_cmd = app.add_subcommand("css", "CSS construction");
  css_cmd->require_subcommand(1);
  std::string c1_path, c2_path, css_name = "css";
  auto* css_build = css_cmd->add_subcommand("build", "build from two parity check matrices");
  css_build->add_option("--c1", c1_path, "parity check file (or 'hamming_7_4')")->required();
  css_build->add_option("--c2", c2_path, "parity check file (or 'hamming_7_4')")->required();
  css_build->add_option("--name", css_name);

  // ---- sim ----
  auto* sim_cmd = app.add_subcommand("sim", "circuit simulation");
  sim_cmd->require_subcommand(1);
  std::string circuit_path, engine = "tableau";
  std::uint64_t shots = 1;
  auto* sim_run = sim_cmd->add_subcommand("run", "run a circuit file");
  sim_run->add_option("--circuit", circuit_path, "circuit file")->required();
  sim_run->add_option("--shots", shots);
  sim_run->add_option("--engine", engine, "tableau|dense");

  // ---- ft ----
  auto* ft_cmd = app.add_subcommand("ft", "fault-tolerance checks and estimates");
  ft_cmd->require_subcommand(1);

  std::string gadget_name = "steane-ec", property_str = "ecb";
  std::size_t opt_t = 1, opt_s = 1, opt_r = 1;
  auto* ft_check = ft_cmd->add_subcommand("check", "exhaustive gadget property check");
  add_code_opts(ft_check);
  ft_check->add_option("--gadget", gadget_name)->required();
  ft_check->add_option("--property", property_str, "prepa|prepb|gatea|gateb|meas|eca|ecb")
      ->required();
  ft_check->add_option("--t", opt_t, "errors the code corrects");
  ft_check->add_option("--s", opt_s, "fault budget (defaults to t)");
  ft_check->add_option("--r", opt_r, "input residual weight");

  auto* ft_build = ft_cmd->add_subcommand("build-gadget", "emit a gadget's circuit");
  add_code_opts(ft_build);
  ft_build->add_option("--gadget", gadget_name)->required();

  std::string exrec_name = "cnot";
  auto* ft_exrec = ft_cmd->add_subcommand("exrec-check", "exhaustive single-fault ExRec sweep");
  add_code_opts(ft_exrec);
  ft_exrec->add_option("--exrec", exrec_name);
  ft_exrec->add_option("--r", opt_r, "input residual weight");

  std::string noise_name = "depolarizing", grid_spec = "1e-5:1e-1:log20";
  double trials_opt = 100000;  // accepts scientific notation like 1e6
  bool with_fit = false;
  auto* ft_threshold = ft_cmd->add_subcommand("threshold", "Monte Carlo failure-rate sweep");
  add_code_opts(ft_threshold);
  ft_threshold->add_option("--exrec", exrec_name);
  ft_threshold->add_option("--noise", noise_name);
  ft_threshold->add_option("--p-grid", grid_spec);
  ft_threshold->add_option("--trials", trials_opt);
  ft_threshold->add_flag("--fit", with_fit, "append a c*p^2 fit over the low-p points");

  bool with_malignant = false;
  auto* ft_count = ft_cmd->add_subcommand("count", "fault-set and malignant-pair counts");
  add_code_opts(ft_count);
  ft_count->add_option("--exrec", exrec_name);
  ft_count->add_flag("--malignant", with_malignant, "enumerate malignant pairs (t=1)");

  double pt_lo = 1e-4, pt_hi = 1e-1;
  auto* ft_pseudo = ft_cmd->add_subcommand("pseudo-threshold", "bisect the rate = p crossing");
  add_code_opts(ft_pseudo);
  ft_pseudo->add_option("--exrec", exrec_name);
  ft_pseudo->add_option("--p-lo", pt_lo);
  ft_pseudo->add_option("--p-hi", pt_hi);
  ft_pseudo->add_option("--trials", trials_opt);

  double lv_p = 1e-4, lv_pt = 1e-3, lv_eps = 1e-15;
  std::uint64_t lv_t = 1, lv_g = 0;
  auto* ft_levels = ft_cmd->add_subcommand("levels", "analytic level-reduction recursion");
  ft_levels->add_option("--p", lv_p)->required();
  ft_levels->add_option("--p-threshold", lv_pt)->required();
  ft_levels->add_option("--epsilon", lv_eps)->required();
  ft_levels->add_option("--t", lv_t);
  ft_levels->add_option("--g", lv_g, "gadget size for the overhead bound");

  auto* ft_teleport = ft_cmd->add_subcommand("teleport-check", "dense pi/8 teleportation check");
  add_code_opts(ft_teleport);

  auto* ft_simulate = ft_cmd->add_subcommand("simulate", "Monte Carlo over a logical circuit");
  add_code_opts(ft_simulate);
  double sim_p = 1e-3;
  ft_simulate->add_option("--circuit", circuit_path, "logical circuit file")->required();
  ft_simulate->add_option("--noise", noise_name);
  ft_simulate->add_option("--p", sim_p);
  ft_simulate->add_option("--trials", trials_opt);

  // Global options (--seed, --jobs, --out) may appear after a subcommand.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (auto* sub : cmd->get_subcommands({})) allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const std::uint64_t trials = static_cast<std::uint64_t>(trials_opt);

  try {
    if (*code_check) return run_code_check(cfg, code_name, code_file);

    if (*code_distance) {
      const auto code = load_code(code_name, code_file);
      std::cout << code.distance() << "\n";
      return kOk;
    }

    if (*code_syndrome) {
      const auto code = load_code(code_name, code_file);
      const auto e = PauliOperator::parse(error_string);
      std::cout << code.syndrome(e).to_string() << "\n";
      return kOk;
    }

    if (*code_logicals) {
      const auto code = load_code(code_name, code_file);
      for (std::size_t i = 0; i < code.logical_x().size(); ++i) {
        std::cout << "X" << i << ": " << code.logical_x()[i].to_string() << "\n";
        std::cout << "Z" << i << ": " << code.logical_z()[i].to_string() << "\n";
      }
      return kOk;
    }

    if (*code_bounds) {
      std::cout << "hamming(n=" << bn << ",k=" << bk << ",t=" << bt
                << "): " << (hamming_bound(bn, bk, bt) ? "holds" : "violated")
                << (hamming_bound_equality(bn, bk, bt) ? " with equality" : "") << "\n";
      std::cout << "gv(n=" << bn << ",k=" << bk << ",d=" << bd
                << "): " << (gv_bound(bn, bk, bd) ? "existence guaranteed" : "not guaranteed")
                << "\n";
      std::cout << "singleton(n=" << bn << ",k=" << bk << ",d=" << bd
                << "): " << (singleton_bound(bn, bk, bd) ? "holds" : "violated") << "\n";
      return kOk;
    }

    if (*bound_table) {
      std::string out = "n,k,d,hamming_t,gv,singleton\n";
      for (std::uint64_t n = 2; n <= table_n; ++n) {
        for (std::uint64_t k = 0; k <= std::min(table_k, n - 1); ++k) {
          for (std::uint64_t d = 2; d <= n; ++d) {
            const std::uint64_t t = (d - 1) / 2;
            out += std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "," +
                   (hamming_bound(n, k, t) ? "1" : "0") + "," + (gv_bound(n, k, d) ? "1" : "0") +
                   "," + (singleton_bound(n, k, d) ? "1" : "0") + "\n";
          }
        }
      }
      write_output(cfg, out);
      return kOk;
    }

    if (*code_kl) {
      const auto code = load_code(code_name, code_file);
      const auto report =
          verify_knill_laflamme(code, weight_one_errors(code.num_qubits()), 1e-10,
                                cfg.dense_limit);
      std::cout << "is_code: " << (report.is_code ? "yes" : "no") << "\n";
      std::cout << "degenerate: " << (report.is_degenerate ? "yes" : "no") << "\n";
      std::cout << "max_residual: " << format_double(report.max_residual) << "\n";
      return report.is_code ? kOk : kDomainError;
    }

    if (*css_build) {
      const auto c1 = load_classical(c1_path);
      const auto c2 = load_classical(c2_path);
      const auto built = css_construct(c1, c2, css_name);
      std::cout << "[[" << built.code.num_qubits() << "," << built.code.num_logical()
                << "]] distance lower bound " << built.distance_lower_bound;
      if (built.code.num_qubits() <= 16) {
        std::cout << ", enumerated distance " << built.code.distance();
      }
      std::cout << "\n";
      write_output(cfg, format_code(built.code));
      return kOk;
    }

    if (*sim_run) {
      std::ifstream in(circuit_path);
      if (!in) throw std::runtime_error("cannot read " + circuit_path);
      const Circuit circuit = parse_circuit(in);
      std::string out;
      for (std::uint64_t shot = 0; shot < shots; ++shot) {
        std::mt19937_64 rng(split_seed(cfg.seed, shot));
        const ShotResult result = engine == "dense"
                                      ? run_dense(circuit, rng, cfg.dense_limit)
                                      : run_tableau(circuit, rng);
        for (std::size_t i = 0; i < result.outcomes.size(); ++i) {
          if (i) out += ' ';
          out += result.outcomes[i] > 0 ? '0' : '1';
        }
        out += '\n';
      }
      write_output(cfg, out);
      return kOk;
    }

    if (*ft_check) {
      const auto code = load_code(code_name, code_file);
      const auto gadget = build_gadget(code, gadget_name);
      GadgetCheckOptions options;
      options.t = opt_t;
      options.fault_budget = ft_check->count("--s") ? opt_s : opt_t;
      options.input_weight = opt_r;
      options.jobs = cfg.jobs;
      options.pattern_cap = cfg.enumeration_cap;
      options.prep_basis = default_prep_basis(gadget_name);
      options.ideal_gate = default_ideal_gate(gadget_name);
      const auto report = check_property(gadget, property_from_name(property_str), options);
      write_output(cfg, to_json(report));
      return report.passed ? kOk : kDomainError;
    }

    if (*ft_build) {
      const auto code = load_code(code_name, code_file);
      const auto gadget = build_gadget(code, gadget_name);
      write_output(cfg, gadget.circuit.to_string());
      return kOk;
    }

    if (*ft_exrec) {
      const auto code = load_code(code_name, code_file);
      const auto harness = build_exrec(code, exrec_name);
      const auto report = check_exrec_single_faults(harness, opt_r, cfg.jobs);
      write_output(cfg, to_json(report, exrec_name));
      return report.failures == 0 ? kOk : kDomainError;
    }

    if (*ft_threshold) {
      const auto code = load_code(code_name, code_file);
      return run_threshold(cfg, code, exrec_name, noise_name, grid_spec, trials, with_fit);
    }

    if (*ft_count) {
      const auto code = load_code(code_name, code_file);
      const auto harness = build_exrec(code, exrec_name);
      if (with_malignant) {
        const auto report = malignant_count(harness, cfg.jobs);
        write_output(cfg, to_json(report, exrec_name));
      } else {
        const std::size_t locations = harness.full.circuit.locations.size();
        write_output(cfg, std::string("{\n  \"A\": \"") +
                              count_fault_sets(locations, 1).str() + "\",\n  \"exrec\": \"" +
                              exrec_name + "\",\n  \"locations\": " + std::to_string(locations) +
                              "\n}");
      }
      return kOk;
    }

    if (*ft_pseudo) {
      const auto code = load_code(code_name, code_file);
      const auto harness = build_exrec(code, exrec_name);
      const auto result = pseudo_threshold(harness, NoiseModel::depolarizing(pt_lo), pt_lo,
                                           pt_hi, cfg.seed, trials, cfg.jobs);
      std::string out = "conclusive: " + std::string(result.conclusive ? "yes" : "no") + "\n";
      if (result.conclusive) {
        out += "estimate: " + format_double(result.estimate) + " in [" +
               format_double(result.bracket_lo) + ", " + format_double(result.bracket_hi) +
               "]\n";
      }
      for (const auto& ev : result.evaluations) {
        out += "p=" + format_double(ev.p) + " rate=" + format_double(ev.report.failure_rate) +
               " ci=[" + format_double(ev.report.wilson_lo) + "," +
               format_double(ev.report.wilson_hi) + "]\n";
      }
      write_output(cfg, out);
      return kOk;
    }

    if (*ft_levels) {
      const std::size_t levels = levels_needed(lv_eps, lv_p, lv_pt, lv_t);
      const double a = std::pow(lv_pt, -static_cast<double>(lv_t));
      const auto seq = level_reduction_bound(lv_p, a, lv_t, levels);
      std::string out = "levels: " + std::to_string(levels) + "\n";
      for (std::size_t j = 0; j < seq.levels.size(); ++j) {
        out += "p(" + std::to_string(j) + "): " + format_double(seq.levels[j]) + "\n";
      }
      if (lv_g > 0) {
        out += "overhead: " + overhead_bound(BigInt(lv_g), levels).str() + "\n";
      }
      write_output(cfg, out);
      return kOk;
    }

    if (*ft_teleport) {
      const auto code = load_code(code_name, code_file);
      const auto report = check_pi8_teleportation(code);
      std::string out;
      for (const auto& b : report.branches) {
        out += "input |" + b.input + "> branch " + std::to_string(b.branch) +
               ": fidelity " + format_double(b.fidelity) + "\n";
      }
      out += std::string("passed: ") + (report.passed ? "yes" : "no") + "\n";
      write_output(cfg, out);
      return report.passed ? kOk : kDomainError;
    }

    if (*ft_simulate) {
      const auto code = load_code(code_name, code_file);
      std::ifstream in(circuit_path);
      if (!in) throw std::runtime_error("cannot read " + circuit_path);
      const Circuit original = parse_circuit(in);
      const auto protocol = build_protocol(original, code);
      const auto report = simulate_protocol(protocol, NoiseModel::depolarizing(sim_p), cfg.seed,
                                            trials, cfg.jobs);
      write_output(cfg, to_json(report));
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  std::cerr << "no subcommand dispatched\n";
  return kUsageError;
}
