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

#include "stabkit/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace stabkit {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

json fault_pattern_json(const FaultPattern& pattern) {
  json arr = json::array();
  for (const auto& f : pattern.faults) {
    arr.push_back({{"location", f.location}, {"pauli", f.error.to_string()}});
  }
  return arr;
}

}  // namespace

std::string to_json(const GadgetCheckReport& report) {
  json j;
  j["gadget"] = report.gadget;
  j["property"] = property_name(report.property);
  j["fault_budget"] = report.fault_budget;
  j["input_weight"] = report.input_weight;
  j["t"] = report.t;
  j["passed"] = report.passed;
  j["patterns_checked"] = report.patterns_checked;
  j["cases_checked"] = report.cases_checked;
  j["rejected"] = report.rejected;
  if (!report.passed) {
    j["counterexample"] = {{"faults", fault_pattern_json(report.counterexample)},
                           {"detail", report.detail}};
    json inputs = json::array();
    for (const auto& p : report.counterexample_inputs) inputs.push_back(p.to_string());
    j["counterexample"]["inputs"] = inputs;
    json refs = json::array();
    for (bool b : report.counterexample_reference) refs.push_back(b ? 1 : 0);
    j["counterexample"]["reference_bits"] = refs;
  }
  return j.dump(2);
}

std::string to_json(const MonteCarloReport& report) {
  json j;
  j["trials"] = report.trials;
  j["failures"] = report.failures;
  j["retry_exhausted"] = report.retry_exhausted;
  j["failure_rate"] = format_double(report.failure_rate);
  j["wilson_95"] = {format_double(report.wilson_lo), format_double(report.wilson_hi)};
  j["seed"] = report.seed;
  return j.dump(2);
}

std::string to_json(const MalignantReport& report, const std::string& exrec_name) {
  json j;
  j["exrec"] = exrec_name;
  j["locations"] = report.locations;
  j["A"] = report.fault_sets.str();
  j["malignant_pairs"] = report.malignant_pairs;
  j["weighted_pairs"] = format_double(report.weighted_pairs);
  j["p_T_bound"] = format_double(report.p_threshold_bound);
  j["assignments_checked"] = report.assignments_checked;
  j["assignments_rejected"] = report.assignments_rejected;
  return j.dump(2);
}

std::string to_json(const ExRecCheckReport& report, const std::string& exrec_name) {
  json j;
  j["exrec"] = exrec_name;
  j["patterns_checked"] = report.patterns_checked;
  j["cases_checked"] = report.cases_checked;
  j["rejected"] = report.rejected;
  j["failures"] = report.failures;
  if (report.failures > 0) {
    j["first_failure"] = fault_pattern_json(report.first_failure);
    j["detail"] = report.detail;
  }
  return j.dump(2);
}

std::string threshold_csv(const std::vector<ThresholdPoint>& points) {
  std::string out = "p,trials,failures,rate,ci_lo,ci_hi\n";
  for (const auto& pt : points) {
    out += format_double(pt.p) + "," + std::to_string(pt.report.trials) + "," +
           std::to_string(pt.report.failures) + "," + format_double(pt.report.failure_rate) +
           "," + format_double(pt.report.wilson_lo) + "," + format_double(pt.report.wilson_hi) +
           "\n";
  }
  return out;
}

std::vector<ThresholdPoint> parse_threshold_csv(const std::string& text) {
  std::vector<ThresholdPoint> points;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    ThresholdPoint pt;
    std::istringstream ls(line);
    std::string field;
    std::getline(ls, field, ',');
    pt.p = std::stod(field);
    std::getline(ls, field, ',');
    pt.report.trials = std::stoull(field);
    std::getline(ls, field, ',');
    pt.report.failures = std::stoull(field);
    std::getline(ls, field, ',');
    pt.report.failure_rate = std::stod(field);
    std::getline(ls, field, ',');
    pt.report.wilson_lo = std::stod(field);
    std::getline(ls, field, ',');
    pt.report.wilson_hi = std::stod(field);
    points.push_back(pt);
  }
  return points;
}

}  // namespace stabkit
