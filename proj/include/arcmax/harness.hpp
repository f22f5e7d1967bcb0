// Copyright 2026 The arcmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Verification harness: known-value checks against classical arclength
// formulas, randomized inequality sweeps over the function catalog, and
// deterministic CSV/JSON report emission.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "arcmax/omega.hpp"
#include "arcmax/series.hpp"

namespace arcmax {

// Sweep description.  Every randomized draw in the sweep is derived from
// `seed` by fixed mixing, so a config determines its report byte for byte.
struct SweepConfig {
  std::vector<OmegaDomain> domains;
  std::vector<double> radii{0.3, 0.6, 0.9};
  std::size_t members_per_domain = 200;
  std::uint64_t seed = 20260814u;
  std::size_t order = kDefaultOrder;  // series truncation N
  std::size_t grid = 4096;            // circle grid M (power of two)
  // Mean-inequality families to run; empty means all of
  // {logabs, powabs, exp, hinge, square}.
  std::vector<std::string> gauges;
  std::string output = "arcmax";  // artifact path prefix

  static SweepConfig default_config();  // full catalog, 200 members, 3 radii
  void validate() const;                // throws std::invalid_argument

  nlohmann::json to_json() const;
  static SweepConfig from_json(const nlohmann::json& j);
};

// One check outcome.  margin is oriented so larger is better; pass is the
// margin test at that check's tolerance.  value/bound carry the two compared
// quantities (value = left-hand side, bound = right-hand side) so reports
// can be re-audited without rerunning.
struct ReportRow {
  std::string check_id;
  std::string inputs;
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string note;
};

struct ReportSummary {
  std::size_t n_checks = 0;
  std::size_t n_pass = 0;
  double worst_margin = 0.0;
};

struct Report {
  std::uint64_t seed = 0;
  std::size_t order = 0;
  std::size_t grid = 0;
  std::vector<ReportRow> rows;
  ReportSummary summary;

  void add(ReportRow row);
  // Sorts rows into the canonical (check_id, inputs) order and recomputes
  // the summary; called once after generation.
  void finalize();
  bool all_pass() const { return summary.n_pass == summary.n_checks; }

  nlohmann::json to_json() const;
  std::string to_csv() const;  // header + rows, %.17g, LF line endings
};

// Classical arclength facts: the half-plane maximum 2 pi r / (1 - r^2) on
// r = 0.1..0.9, the Koebe-function sandwich between the Yamashita minorant
// m(r) and 2 pi r / (1 - r)^2, the minorant chain down to
// pi r (1 + r) / (2 (1 - r)^2), and the small-radius limit L_r -> 2 pi r.
Report known_values(std::size_t order = 512, std::size_t grid = 4096);

// Full sweep: per (domain, radius), the extremal plus members_per_domain
// random members are checked for the arclength inequality, the integral-mean
// families, star-function domination, partial means over random and greedy
// arc systems, subordination, and the angular-derivative identity.
Report verify_all(const SweepConfig& config);

// Control experiment: a fake member whose curvature profile 1 + 3z leaves
// the right half-plane.  The returned report must contain failing rows.
Report adversarial_fixture(std::size_t order = kDefaultOrder, std::size_t grid = 4096);

// Writes <prefix>_report.json and <prefix>_rows.csv (UTF-8, LF).
void write_report(const Report& report, const std::string& prefix);

// Writes <prefix>_profiles.csv, <prefix>_domination.csv, <prefix>_growth.csv.
// An empty sweep produces headers-only files.
void emit_plot_data(const SweepConfig& config, const std::string& prefix);

}  // namespace arcmax
