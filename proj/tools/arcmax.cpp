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
// Command-line front end.  Exit codes: 0 = all checks passed, 1 = at least
// one check failed, 2 = usage or configuration error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "arcmax/functionals.hpp"
#include "arcmax/harness.hpp"
#include "arcmax/members.hpp"
#include "arcmax/omega.hpp"
#include "arcmax/symmetrization.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return nlohmann::json::parse(in);
}

void print_summary(const arcmax::Report& report) {
  std::printf("checks: %zu  passed: %zu  worst margin: %.6g\n",
              report.summary.n_checks, report.summary.n_pass,
              report.summary.worst_margin);
  for (const auto& row : report.rows) {
    if (!row.pass) {
      std::printf("FAIL %s %s value=%.9g bound=%.9g margin=%.3g %s\n",
                  row.check_id.c_str(), row.inputs.c_str(), row.value, row.bound,
                  row.margin, row.note.c_str());
    }
  }
}

int run_known_values(int order, std::size_t grid, const std::string& out) {
  const arcmax::Report report =
      arcmax::known_values(std::size_t(order), grid);
  if (!out.empty()) arcmax::write_report(report, out);
  print_summary(report);
  return report.all_pass() ? 0 : 1;
}

struct VerifyOptions {
  std::string config_path;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> order;
  std::optional<std::size_t> grid;
  std::optional<std::size_t> members;
};

int run_verify(const VerifyOptions& opt) {
  arcmax::SweepConfig cfg = opt.config_path.empty()
                                ? arcmax::SweepConfig::default_config()
                                : arcmax::SweepConfig::from_json(
                                      parse_json_file(opt.config_path));
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.order) cfg.order = std::size_t(*opt.order);
  if (opt.grid) cfg.grid = *opt.grid;
  if (opt.members) cfg.members_per_domain = *opt.members;
  if (!opt.out.empty()) cfg.output = opt.out;
  cfg.validate();

  const arcmax::Report report = arcmax::verify_all(cfg);
  arcmax::write_report(report, cfg.output);
  print_summary(report);
  std::printf("wrote %s_report.json and %s_rows.csv\n", cfg.output.c_str(),
              cfg.output.c_str());
  return report.all_pass() ? 0 : 1;
}

int run_extremal(const std::string& domain_json, double r, int order) {
  arcmax::OmegaDomain dom =
      arcmax::OmegaDomain::from_json(nlohmann::json::parse(domain_json));
  if (!dom.verify_starlike()) {
    std::fprintf(stderr, "domain %s fails the starlike certification\n",
                 dom.label().c_str());
    return 2;
  }
  const arcmax::MemberFunction k = arcmax::extremal(dom, std::size_t(order));
  nlohmann::json out{{"domain", dom.label()},
                     {"r", r},
                     {"arclength", arcmax::arclength(k, r)}};
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t n = 0; n <= std::min<std::size_t>(8, k.fprime.order()); ++n) {
    coeffs.push_back({k.fprime[n].real(), k.fprime[n].imag()});
  }
  out["fprime_coefficients"] = std::move(coeffs);
  std::printf("%s\n", out.dump(2).c_str());
  return 0;
}

std::vector<double> read_values(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      std::size_t used = 0;
      const double v = std::stod(line, &used);
      values.push_back(v);
      (void)used;
    } catch (const std::exception&) {
      if (values.empty()) continue;  // tolerate one header line
      throw std::runtime_error("not a number: " + line);
    }
  }
  return values;
}

int run_rearrange(const std::string& input, const std::string& out) {
  const std::vector<double> values = read_values(input);
  const auto h = arcmax::SampledPeriodic::from_values(values);
  const auto hat = arcmax::rearrange(h);
  const auto star = arcmax::star_function(h);
  const std::size_t m = h.grid();

  std::ostringstream rearranged;
  rearranged << "theta,original,rearranged\n";
  for (std::size_t j = 0; j < m; ++j) {
    const double theta = -kPi + 2.0 * kPi * double(j) / double(m);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", theta, h.values()[j],
                  hat.values()[j]);
    rearranged << buf;
  }
  std::ostringstream star_csv;
  star_csv << "theta,star\n";
  for (std::size_t k = 0; k < star.size(); ++k) {
    const double theta = kPi * double(k) / double(star.size() - 1);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", theta, star[k]);
    star_csv << buf;
  }

  if (out.empty()) {
    std::printf("%s\n%s", rearranged.str().c_str(), star_csv.str().c_str());
  } else {
    std::ofstream(out + "_rearranged.csv", std::ios::binary) << rearranged.str();
    std::ofstream(out + "_star.csv", std::ios::binary) << star_csv.str();
    std::printf("wrote %s_rearranged.csv and %s_star.csv\n", out.c_str(),
                out.c_str());
  }
  return 0;
}

int run_plot_data(const std::string& config_path, const std::string& out) {
  arcmax::SweepConfig cfg =
      arcmax::SweepConfig::from_json(parse_json_file(config_path));
  const std::string prefix = out.empty() ? cfg.output : out;
  if (!std::filesystem::exists(prefix + "_report.json")) {
    std::fprintf(stderr,
                 "missing %s_report.json; run `arcmax verify` with this config "
                 "first\n",
                 prefix.c_str());
    return 2;
  }
  arcmax::emit_plot_data(cfg, prefix);
  std::printf("wrote %s_profiles.csv, %s_domination.csv, %s_growth.csv\n",
              prefix.c_str(), prefix.c_str(), prefix.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arcmax: arclength and integral-mean verification for convex-type "
      "univalent function classes"};
  app.require_subcommand(1);

  auto* known = app.add_subcommand(
      "known-values", "check classical closed-form values of the extremal map");
  int kv_order = 512;
  std::size_t kv_grid = 4096;
  std::string kv_out;
  known->add_option("--order", kv_order, "series truncation order")
      ->check(CLI::Range(8, 2046));
  known->add_option("--grid", kv_grid, "quadrature grid size (power of two)");
  known->add_option("--out", kv_out, "artifact prefix (writes report + rows)");

  auto* verify = app.add_subcommand(
      "verify", "run the full verification sweep and write report artifacts");
  VerifyOptions vo;
  std::uint64_t vo_seed = 0;
  int vo_order = 0;
  std::size_t vo_grid = 0, vo_members = 0;
  verify->add_option("--config", vo.config_path,
                     "JSON sweep configuration (default: built-in catalog)");
  auto* seed_opt = verify->add_option("--seed", vo_seed, "random seed override");
  auto* order_opt =
      verify->add_option("--order", vo_order, "series truncation order override");
  auto* grid_opt = verify->add_option("--grid", vo_grid, "grid size override");
  auto* members_opt = verify->add_option("--members", vo_members,
                                         "random members per domain override");
  verify->add_option("--out", vo.out, "artifact prefix override");

  auto* extremal_cmd = app.add_subcommand(
      "extremal", "construct the extremal map of a domain and print its data");
  std::string ex_domain;
  double ex_r = 0.5;
  int ex_order = 256;
  extremal_cmd
      ->add_option("--domain", ex_domain,
                   "domain JSON, e.g. {\"kind\":\"half_plane\",\"beta\":0.0} or "
                   "{\"kind\":\"sector\",\"alpha\":0.5}")
      ->required();
  extremal_cmd->add_option("--r", ex_r, "circle radius in (0, 0.95]")->required();
  extremal_cmd->add_option("--order", ex_order, "series truncation order")
      ->check(CLI::Range(8, 2046));

  auto* rearrange_cmd = app.add_subcommand(
      "rearrange", "symmetric nonincreasing rearrangement of sampled values");
  std::string re_input, re_out;
  rearrange_cmd
      ->add_option("--input", re_input, "CSV/text file, one sample per line")
      ->required();
  rearrange_cmd->add_option("--out", re_out, "output prefix (default: stdout)");

  auto* plot = app.add_subcommand(
      "plot-data", "emit plot-ready CSV files for an existing sweep report");
  std::string pd_config, pd_out;
  plot->add_option("--config", pd_config, "JSON sweep configuration")->required();
  plot->add_option("--out", pd_out, "artifact prefix override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (known->parsed()) return run_known_values(kv_order, kv_grid, kv_out);
    if (verify->parsed()) {
      if (*seed_opt) vo.seed = vo_seed;
      if (*order_opt) vo.order = vo_order;
      if (*grid_opt) vo.grid = vo_grid;
      if (*members_opt) vo.members = vo_members;
      return run_verify(vo);
    }
    if (extremal_cmd->parsed()) return run_extremal(ex_domain, ex_r, ex_order);
    if (rearrange_cmd->parsed()) return run_rearrange(re_input, re_out);
    if (plot->parsed()) return run_plot_data(pd_config, pd_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
