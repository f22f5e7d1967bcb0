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

#include "arcmax/symmetrization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace arcmax {
namespace {

constexpr double kPi = AnalyticCircle::kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_low(double v) { return v == -kInf ? kLogClamp : v; }

// Descending clamped copy of the samples plus prefix sums; the workhorse for
// level integrals and star functions on grids.
struct SortedSamples {
  std::vector<double> desc;
  std::vector<double> prefix;  // prefix[k] = sum of the k largest
  double cell;

  explicit SortedSamples(const SampledPeriodic& h)
      : desc(h.values()), cell(h.cell()) {
    for (double& v : desc) v = clamp_low(v);
    std::sort(desc.begin(), desc.end(), std::greater<>());
    prefix.resize(desc.size() + 1);
    prefix[0] = 0.0;
    for (std::size_t k = 0; k < desc.size(); ++k) {
      prefix[k + 1] = prefix[k] + desc[k];
    }
  }

  // integral of (h - t)^+ over the circle.
  double excess(double t) const {
    const auto k = std::size_t(
        std::lower_bound(desc.begin(), desc.end(), t, std::greater<>()) -
        desc.begin());  // first entry <= t, so k entries lie strictly above
    return cell * (prefix[k] - t * double(k));
  }

  double quantile(double q) const {
    const auto i = std::min<std::size_t>(
        desc.size() - 1, std::size_t(std::max(0.0, q * double(desc.size()))));
    return desc[i];
  }
};

// Pieces of a step function sorted by descending value, with cumulative
// measures and integrals; the exact analogue of SortedSamples.
struct SortedPieces {
  std::vector<double> value;
  std::vector<double> length;
  std::vector<double> cum_len;  // cum_len[i] = total measure of pieces 0..i-1
  std::vector<double> cum_int;

  explicit SortedPieces(const StepFunction& h) {
    std::vector<std::size_t> order(h.pieces());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return h.values()[a] != h.values()[b] ? h.values()[a] > h.values()[b]
                                            : a < b;
    });
    for (std::size_t i : order) {
      value.push_back(h.values()[i]);
      length.push_back(h.breaks()[i + 1] - h.breaks()[i]);
    }
    cum_len.resize(value.size() + 1);
    cum_int.resize(value.size() + 1);
    cum_len[0] = cum_int[0] = 0.0;
    for (std::size_t i = 0; i < value.size(); ++i) {
      cum_len[i + 1] = cum_len[i] + length[i];
      cum_int[i + 1] = cum_int[i] + length[i] * value[i];
    }
  }

  double excess(double t) const {
    double s = 0.0;
    for (std::size_t i = 0; i < value.size() && value[i] > t; ++i) {
      s += length[i] * (value[i] - t);
    }
    return s;
  }
};

double check_theta(double theta) {
  if (theta < -1e-12 || theta > kPi + 1e-12) {
    throw std::invalid_argument("star function argument must lie in [0, pi]");
  }
  return std::min(std::max(theta, 0.0), kPi);
}

}  // namespace

// --------------------------------------------------------------- samples --

SampledPeriodic SampledPeriodic::from_values(std::vector<double> values) {
  if (values.size() < kMinGrid) {
    throw std::invalid_argument("sampled function needs at least 4 cells");
  }
  for (double v : values) {
    if (std::isnan(v) || v == kInf) {
      throw std::invalid_argument("samples must be real or -infinity");
    }
  }
  SampledPeriodic s;
  s.values_ = std::move(values);
  return s;
}

double SampledPeriodic::integral() const {
  double sum = 0.0;
  for (double v : values_) sum += clamp_low(v);
  return cell() * sum;
}

StepFunction StepFunction::make(std::vector<double> breaks,
                                std::vector<double> values) {
  if (breaks.size() != values.size() + 1 || values.empty()) {
    throw std::invalid_argument("step function needs one more break than values");
  }
  if (std::abs(breaks.front() + kPi) > 1e-12 || std::abs(breaks.back() - kPi) > 1e-12) {
    throw std::invalid_argument("breaks must start at -pi and end at pi");
  }
  breaks.front() = -kPi;
  breaks.back() = kPi;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) {
      throw std::invalid_argument("breaks must be strictly increasing");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("step values must be finite");
    }
  }
  StepFunction s;
  s.breaks_ = std::move(breaks);
  s.values_ = std::move(values);
  return s;
}

double StepFunction::value_at(double theta) const {
  if (theta < -kPi - 1e-12 || theta > kPi + 1e-12) {
    throw std::invalid_argument("step argument must lie in [-pi, pi]");
  }
  theta = std::min(std::max(theta, -kPi), kPi);
  auto ub = std::size_t(std::upper_bound(breaks_.begin(), breaks_.end(), theta) -
                        breaks_.begin());
  if (ub == 0) ub = 1;                          // theta == -pi
  if (ub > values_.size()) ub = values_.size(); // theta == pi joins the last piece
  return values_[ub - 1];
}

double StepFunction::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    s += values_[i] * (breaks_[i + 1] - breaks_[i]);
  }
  return s;
}

SampledPeriodic StepFunction::sample(std::size_t grid) const {
  if (grid < kMinGrid) {
    throw std::invalid_argument("sampling grid needs at least 4 cells");
  }
  const double h = 2.0 * kPi / double(grid);
  std::vector<double> vals(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    vals[j] = value_at(-kPi + (double(j) + 0.5) * h);
  }
  return SampledPeriodic::from_values(std::move(vals));
}

// ---------------------------------------------------------- distribution --

DistributionFn::DistributionFn(std::vector<double> levels,
                               std::vector<double> measures, double total)
    : levels_(std::move(levels)), measures_(std::move(measures)), total_(total) {
  if (levels_.size() != measures_.size()) {
    throw std::invalid_argument("levels and measures must match");
  }
  for (std::size_t k = 0; k + 1 < levels_.size(); ++k) {
    if (!(levels_[k] < levels_[k + 1]) || measures_[k] < measures_[k + 1]) {
      throw std::invalid_argument("distribution data must be monotone");
    }
  }
  if (!measures_.empty() && measures_.front() > total_) {
    throw std::invalid_argument("measures exceed the total");
  }
}

double DistributionFn::operator()(double t) const {
  // lambda is constant on [levels_[k], levels_[k+1}) -- right-continuous.
  auto ub = std::size_t(std::upper_bound(levels_.begin(), levels_.end(), t) -
                        levels_.begin());
  if (ub == 0) return total_;
  return measures_[ub - 1];
}

DistributionFn distribution(const SampledPeriodic& h) {
  std::vector<double> sorted;
  sorted.reserve(h.grid());
  for (double v : h.values()) {
    if (v != -kInf) sorted.push_back(v);
  }
  if (sorted.empty()) {
    throw std::invalid_argument("distribution needs at least one finite sample");
  }
  std::sort(sorted.begin(), sorted.end());
  const double cell = h.cell();
  std::vector<double> levels, measures;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    levels.push_back(sorted[i]);
    // strictly-above count: everything past the run of this value
    measures.push_back(cell * double(sorted.size() - (i + 1)));
  }
  return DistributionFn(std::move(levels), std::move(measures),
                        cell * double(sorted.size()));
}

DistributionFn distribution(const StepFunction& h) {
  std::vector<double> distinct = h.values();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<double> measures(distinct.size(), 0.0);
  for (std::size_t i = 0; i < h.pieces(); ++i) {
    const double len = h.breaks()[i + 1] - h.breaks()[i];
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      if (h.values()[i] > distinct[k]) measures[k] += len;
    }
  }
  return DistributionFn(std::move(distinct), std::move(measures));
}

// ------------------------------------------------------------- rearrange --

SampledPeriodic rearrange(const SampledPeriodic& h) {
  const std::size_t m = h.grid();
  std::vector<double> sorted = h.values();
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<double> out(m);
  // Largest at theta = 0 (index m/2), then alternately one step right, one
  // step left; the smallest sample lands at theta = -pi (index 0).
  const std::size_t c = m / 2;
  out[c] = sorted[0];
  for (std::size_t i = 1; i < m; ++i) {
    if (i % 2 == 1) {
      out[(c + (i + 1) / 2) % m] = sorted[i];
    } else {
      out[c - i / 2] = sorted[i];
    }
  }
  return SampledPeriodic::from_values(std::move(out));
}

StepFunction rearrange(const StepFunction& h) {
  SortedPieces sp(h);
  // Merge equal adjacent values so output pieces are strictly decreasing
  // outward from the center.
  std::vector<double> vals, lens;
  for (std::size_t i = 0; i < sp.value.size(); ++i) {
    if (!vals.empty() && vals.back() == sp.value[i]) {
      lens.back() += sp.length[i];
    } else {
      vals.push_back(sp.value[i]);
      lens.push_back(sp.length[i]);
    }
  }
  const std::size_t L = vals.size();
  std::vector<double> cum(L + 1, 0.0);
  for (std::size_t i = 0; i < L; ++i) cum[i + 1] = cum[i] + lens[i];
  // Value vals[i] occupies the annulus cum[i]/2 < |theta| < cum[i+1]/2.
  std::vector<double> breaks, values;
  breaks.push_back(-kPi);
  for (std::size_t i = L; i-- > 1;) {
    breaks.push_back(-cum[i] / 2.0);
    values.push_back(vals[i]);
  }
  values.push_back(vals[0]);
  for (std::size_t i = 1; i < L; ++i) {
    breaks.push_back(cum[i] / 2.0);
    values.push_back(vals[i]);
  }
  breaks.push_back(kPi);
  return StepFunction::make(std::move(breaks), std::move(values));
}

// --------------------------------------------------------- star function --

std::vector<double> star_function(const SampledPeriodic& h) {
  SortedSamples ss(h);
  const std::size_t m = h.grid();
  // theta_k = k pi / m carries a set budget of 2 theta_k = k cells.
  std::vector<double> star(m + 1);
  for (std::size_t k = 0; k <= m; ++k) star[k] = ss.cell * ss.prefix[k];
  return star;
}

double star_function(const StepFunction& h, double theta) {
  theta = check_theta(theta);
  SortedPieces sp(h);
  const double budget = 2.0 * theta;
  auto ub = std::size_t(std::upper_bound(sp.cum_len.begin(), sp.cum_len.end(),
                                         budget) -
                        sp.cum_len.begin());
  if (ub == 0) return 0.0;
  if (ub > sp.value.size()) return sp.cum_int.back();
  // Partial mass from piece ub-1 on top of all earlier pieces.
  return sp.cum_int[ub - 1] + sp.value[ub - 1] * (budget - sp.cum_len[ub - 1]);
}

double star_function_by_sup(const StepFunction& h, double theta) {
  theta = check_theta(theta);
  // Greedy level filling: walk the distinct levels downward, taking as much
  // measure at each level as the remaining budget allows.
  std::vector<double> levels = h.values();
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double remaining = 2.0 * theta;
  double total = 0.0;
  for (double lv : levels) {
    if (remaining <= 0.0) break;
    double mass = 0.0;
    for (std::size_t i = 0; i < h.pieces(); ++i) {
      if (h.values()[i] == lv) mass += h.breaks()[i + 1] - h.breaks()[i];
    }
    const double take = std::min(remaining, mass);
    total += lv * take;
    remaining -= take;
  }
  return total;
}

// ----------------------------------------------------- Baernstein checks --

namespace {

// Shared verdict assembly for both data kinds.  excess_h/excess_H evaluate
// the hinge integral at a level; mean_h/mean_H the full-circle gauge mean.
BaernsteinReport assemble(
    const std::vector<double>& levels, double low_level,
    const std::function<double(double)>& excess_h,
    const std::function<double(double)>& excess_H,
    const std::vector<double>& star_h, const std::vector<double>& star_H,
    const std::vector<ConvexGauge>& family,
    const std::function<double(const ConvexGauge&)>& mean_h,
    const std::function<double(const ConvexGauge&)>& mean_H, double tol) {
  BaernsteinReport rep;
  double vb = -kInf;
  auto visit_level = [&](double t) {
    const double qh = excess_h(t), qH = excess_H(t);
    vb = std::max(vb, (qh - qH) / std::max(1.0, std::abs(qH)));
  };
  for (double t : levels) visit_level(t);
  visit_level(low_level);
  rep.violation_b = vb;
  rep.holds_b = vb <= tol;

  double vc = -kInf;
  for (std::size_t k = 0; k < star_h.size(); ++k) {
    vc = std::max(vc, (star_h[k] - star_H[k]) / std::max(1.0, std::abs(star_H[k])));
  }
  rep.violation_c = vc;
  rep.holds_c = vc <= tol;

  rep.holds_a_on_family = true;
  for (const auto& phi : family) {
    const double lhs = mean_h(phi), rhs = mean_H(phi);
    if (lhs > rhs + tol * std::max(1.0, std::abs(rhs))) {
      rep.holds_a_on_family = false;
    }
  }
  // (b) and (c) are equivalent statements; (b) for the full convex family
  // implies every (a) spot check.
  rep.consistent = rep.holds_b == rep.holds_c &&
                   !(rep.holds_b && !rep.holds_a_on_family);
  return rep;
}

std::vector<double> merged_levels(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  for (double& v : a) v = clamp_low(v);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

BaernsteinReport check_baernstein(const SampledPeriodic& h, const SampledPeriodic& H,
                                  double tol) {
  if (h.grid() != H.grid()) {
    throw std::invalid_argument("Baernstein check needs matching grids");
  }
  SortedSamples sh(h), sH(H);
  auto levels = merged_levels(h.values(), H.values());
  const double low = levels.front() - 1.0;

  std::vector<ConvexGauge> family = {
      ConvexGauge::exp_gauge(), ConvexGauge::hinge(sH.quantile(0.25)),
      ConvexGauge::hinge(sH.quantile(0.5)), ConvexGauge::hinge(sH.quantile(0.75))};
  auto mean_of = [](const SortedSamples& s, const ConvexGauge& phi) {
    double sum = 0.0;
    for (double v : s.desc) sum += phi(v);
    return s.cell * sum;
  };
  return assemble(
      levels, low, [&](double t) { return sh.excess(t); },
      [&](double t) { return sH.excess(t); }, star_function(h), star_function(H),
      family, [&](const ConvexGauge& p) { return mean_of(sh, p); },
      [&](const ConvexGauge& p) { return mean_of(sH, p); }, tol);
}

BaernsteinReport check_baernstein(const StepFunction& h, const StepFunction& H,
                                  double tol) {
  SortedPieces sh(h), sH(H);
  auto levels = merged_levels(h.values(), H.values());
  const double low = levels.front() - 1.0;

  // Both stars are piecewise linear in theta with kinks where the budget
  // exhausts a sorted piece; comparing at the merged kinks is exact.
  std::vector<double> thetas = {0.0, kPi};
  for (double c : sh.cum_len) thetas.push_back(c / 2.0);
  for (double c : sH.cum_len) thetas.push_back(c / 2.0);
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
  std::vector<double> star_h, star_H;
  for (double t : thetas) {
    star_h.push_back(star_function(h, t));
    star_H.push_back(star_function(H, t));
  }

  std::vector<ConvexGauge> family = {ConvexGauge::exp_gauge()};
  for (double t : levels) family.push_back(ConvexGauge::hinge(t));
  auto mean_of = [](const SortedPieces& s, const ConvexGauge& phi) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.value.size(); ++i) {
      sum += s.length[i] * phi(s.value[i]);
    }
    return sum;
  };
  return assemble(
      levels, low, [&](double t) { return sh.excess(t); },
      [&](double t) { return sH.excess(t); }, star_h, star_H, family,
      [&](const ConvexGauge& p) { return mean_of(sh, p); },
      [&](const ConvexGauge& p) { return mean_of(sH, p); }, tol);
}

// --------------------------------------------------------- star domination --

StarDomination check_star_domination(const Profile& uf, const Profile& uF,
                                     const ConvexGauge& phi, std::size_t points,
                                     double tol) {
  if (points < 2) throw std::invalid_argument("need at least two theta points");
  if (!phi.nondecreasing()) {
    throw std::invalid_argument("star domination requires a nondecreasing gauge");
  }
  StarDomination rep;
  rep.theta.resize(points);
  for (std::size_t k = 0; k < points; ++k) {
    rep.theta[k] = kPi * double(k) / double(points - 1);
  }

  // Levels tau_k = u_F(theta_k); running minimum guards the nonincreasing
  // requirement against rounding on flat stretches.
  std::vector<double> taus(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double v = uF.value(rep.theta[k]);
    taus[k] = k == 0 ? v : std::min(taus[k - 1], v);
  }

  auto table = dual_table(uf, phi, taus);

  // Exact F side: u_F is symmetric nonincreasing, so its star at theta is
  // the integral of phi(u_F) over (-theta, theta).
  rep.F_star.resize(points);
  if (phi.smooth()) {
    ArcQuadrature quad(uF, phi);
    for (std::size_t k = 0; k < points; ++k) {
      rep.F_star[k] = quad.over_arc(-rep.theta[k], rep.theta[k]);
    }
  } else {
    for (std::size_t k = 0; k < points; ++k) {
      rep.F_star[k] = gauge_arc_integral(
          uF, phi, ArcSet::from_arcs({{-rep.theta[k], rep.theta[k]}}));
    }
  }

  rep.f_star.resize(points);
  rep.margin.resize(points);
  rep.min_margin = kInf;
  for (std::size_t k = 0; k < points; ++k) {
    rep.f_star[k] = table.excess[k] + 2.0 * rep.theta[k] * phi(taus[k]);
    rep.margin[k] =
        (rep.F_star[k] - rep.f_star[k]) / std::max(1.0, std::abs(rep.F_star[k]));
    rep.min_margin = std::min(rep.min_margin, rep.margin[k]);
  }
  rep.pass = rep.min_margin >= -tol;
  return rep;
}

}  // namespace arcmax
