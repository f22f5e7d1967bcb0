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
// Circular rearrangement machinery on [-pi, pi]: distribution functions,
// the symmetric nonincreasing rearrangement, star functions by both the
// supremum and the cumulative-sum definitions, and the equivalence checks
// between integral orderings (Baernstein's lemma) used by the sweep.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arcmax/functionals.hpp"

namespace arcmax {

// Real samples at the uniform angles theta_j = -pi + 2 pi j / M; each sample
// stands for one grid cell of measure 2 pi / M.  Entries may be -infinity
// (logarithmic gauges at zeros); +infinity and NaN are rejected.
class SampledPeriodic {
 public:
  static SampledPeriodic from_values(std::vector<double> values);

  std::size_t grid() const { return values_.size(); }
  double cell() const { return 2.0 * AnalyticCircle::kPi / double(values_.size()); }
  const std::vector<double>& values() const { return values_; }

  // Cell-sum integral with -infinity entries clamped to kLogClamp.
  double integral() const;

 private:
  SampledPeriodic() = default;
  std::vector<double> values_;
};

// Piecewise-constant function on [-pi, pi]: value v_i on [b_i, b_{i+1}).
class StepFunction {
 public:
  // breaks must be strictly increasing from -pi to pi; values match pieces.
  static StepFunction make(std::vector<double> breaks, std::vector<double> values);

  std::size_t pieces() const { return values_.size(); }
  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<double>& values() const { return values_; }

  double value_at(double theta) const;
  double integral() const;

  // Midpoint samples on a uniform grid; exact when breakpoints align.
  SampledPeriodic sample(std::size_t grid) const;

 private:
  StepFunction() = default;
  std::vector<double> breaks_;  // size pieces() + 1
  std::vector<double> values_;
};

// The measure lambda(t) = |{theta : h(theta) > t}| as a right-continuous
// nonincreasing step function of the level t.
class DistributionFn {
 public:
  // total is lambda below every level: 2 pi unless -infinity samples eat
  // part of the circle.
  DistributionFn(std::vector<double> levels, std::vector<double> measures,
                 double total = 2.0 * AnalyticCircle::kPi);

  double operator()(double t) const;
  const std::vector<double>& levels() const { return levels_; }
  const std::vector<double>& measures() const { return measures_; }

 private:
  std::vector<double> levels_;    // strictly increasing, finite
  std::vector<double> measures_;  // measures_[k] = lambda(levels_[k])
  double total_;
};

DistributionFn distribution(const SampledPeriodic& h);
DistributionFn distribution(const StepFunction& h);

// Symmetric nonincreasing rearrangement.  The grid version places the
// largest sample at theta = 0 and alternates right/left outward, the
// smallest landing at theta = -pi; the step version is exact.
SampledPeriodic rearrange(const SampledPeriodic& h);
StepFunction rearrange(const StepFunction& h);

// Star function h*(theta) = sup over sets E of measure 2 theta of the
// integral of h over E.  The grid version returns the M + 1 values at
// theta_k = k pi / M (cumulative sums of the sorted samples); the step
// version evaluates the exact piecewise-linear star at one point.
std::vector<double> star_function(const SampledPeriodic& h);
double star_function(const StepFunction& h, double theta);

// Independent oracle for the supremum definition: greedy level filling,
// taking mass from the highest step levels first.
double star_function_by_sup(const StepFunction& h, double theta);

// Equivalence report for the three orderings of a pair (h, H):
//   (a) integral of Phi(h) <= integral of Phi(H) for convex nondecreasing Phi
//       (spot-checked on exp and three hinge thresholds),
//   (b) integral of (h - t)^+ <= same for H, at all merged data levels,
//   (c) h* <= H* pointwise.
// (b) and (c) are equivalent statements, so their verdicts must agree;
// consistent also requires the (a) spot checks not to contradict (b).
struct BaernsteinReport {
  bool holds_b = false;
  bool holds_c = false;
  bool holds_a_on_family = false;
  bool consistent = false;
  double violation_b = 0.0;  // max relative excess of the h side, <= 0 if none
  double violation_c = 0.0;
};

BaernsteinReport check_baernstein(const SampledPeriodic& h, const SampledPeriodic& H,
                                  double tol = 1e-10);
BaernsteinReport check_baernstein(const StepFunction& h, const StepFunction& H,
                                  double tol = 1e-12);

// Star-function domination (Phi o u_f)* <= (Phi o u_F)* on a uniform theta
// grid in [0, pi].  The F side is exact (u_F is symmetric nonincreasing, so
// its star is the symmetric-interval integral); the f side is the dual
// upper bound excess + 2 theta Phi(tau) with tau = u_F(theta), which is
// tight exactly at rotations of the extremal profile.  margins are relative
// to max(1, |F side|); pass requires min margin >= -tol.
struct StarDomination {
  std::vector<double> theta;
  std::vector<double> f_star;  // upper bounds for the f side
  std::vector<double> F_star;  // exact F side
  std::vector<double> margin;  // relative margins
  double min_margin = 0.0;
  bool pass = false;
};

StarDomination check_star_domination(const Profile& uf, const Profile& uF,
                                     const ConvexGauge& phi, std::size_t points = 257,
                                     double tol = 1e-8);

}  // namespace arcmax
