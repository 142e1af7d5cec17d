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

#ifndef STABKIT_REPORT_IO_HPP
#define STABKIT_REPORT_IO_HPP

#include <string>
#include <vector>

#include "stabkit/gadget_check.hpp"
#include "stabkit/monte_carlo.hpp"
#include "stabkit/threshold.hpp"

namespace stabkit {

/// Doubles print with 12 significant digits everywhere, so identical runs
/// emit byte-identical reports.
std::string format_double(double v);

std::string to_json(const GadgetCheckReport& report);
std::string to_json(const MonteCarloReport& report);
std::string to_json(const MalignantReport& report, const std::string& exrec_name);
std::string to_json(const ExRecCheckReport& report, const std::string& exrec_name);

/// Threshold sweep rows; the CSV columns are
/// p,trials,failures,rate,ci_lo,ci_hi.
struct ThresholdPoint {
  double p = 0.0;
  MonteCarloReport report;
};
std::string threshold_csv(const std::vector<ThresholdPoint>& points);
std::vector<ThresholdPoint> parse_threshold_csv(const std::string& text);

}  // namespace stabkit

#endif  // STABKIT_REPORT_IO_HPP
