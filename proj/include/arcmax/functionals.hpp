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

#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arcmax/members.hpp"
#include "arcmax/series.hpp"

namespace arcmax {

// Value used in place of log 0 when a logarithmic integrand hits a zero.
inline constexpr double kLogClamp = -1e3;

// A convex function Phi on the real line.  Hinge and PiecewiseLinear have
// kinks; everything else is smooth.  d1 is the right derivative at a kink.
class ConvexGauge {
 public:
  enum class Kind { Exp, Hinge, Square, Linear, PiecewiseLinear };

  static ConvexGauge exp_gauge();
  static ConvexGauge hinge(double t0);
  static ConvexGauge square();
  static ConvexGauge linear(double slope, double intercept);
  // Piecewise-linear interpolant of (knots[i], values[i]) with end-slope
  // extrapolation; secant slopes must be nondecreasing (convexity).
  static ConvexGauge piecewise_linear(std::vector<double> knots,
                                      std::vector<double> values);

  Kind kind() const { return kind_; }
  double t0() const { return t0_; }
  bool nondecreasing() const;
  bool smooth() const { return kind_ != Kind::Hinge && kind_ != Kind::PiecewiseLinear; }

  double operator()(double t) const;
  double d1(double t) const;
  double d2(double t) const;
  double d3(double t) const;

  std::string label() const;

 private:
  ConvexGauge() = default;
  Kind kind_ = Kind::Exp;
  double t0_ = 0.0;          // Hinge threshold
  double a_ = 0.0, b_ = 0.0; // Linear slope/intercept
  std::vector<double> knots_, values_, slopes_;
};

// A subharmonic function u(w) of one complex variable, applied to log f'.
class SubharmonicGauge {
 public:
  enum class Kind { ArcLength, LogAbs, PowAbs, ConvexOfRe, ConvexOfIm };

  static SubharmonicGauge arc_length(double r);
  static SubharmonicGauge log_abs();
  static SubharmonicGauge pow_abs(double p);
  static SubharmonicGauge convex_of_re(ConvexGauge phi, int sign);
  static SubharmonicGauge convex_of_im(ConvexGauge phi, int sign);

  Kind kind() const { return kind_; }
  const ConvexGauge& phi() const { return phi_; }
  int sign() const { return sign_; }
  double p() const { return p_; }
  double r() const { return r_; }

  double operator()(Complex w) const;
  std::string label() const;

 private:
  SubharmonicGauge() = default;
  Kind kind_ = Kind::LogAbs;
  ConvexGauge phi_ = ConvexGauge::exp_gauge();
  int sign_ = +1;
  double p_ = 1.0;
  double r_ = 0.0;
};

// A finite union of disjoint closed arcs of [-pi, pi].
class ArcSet {
 public:
  ArcSet() = default;
  static ArcSet full_circle();
  // Validates: endpoints within [-pi, pi], a <= b, pairwise disjoint
  // interiors.  Arcs are stored sorted by left endpoint.
  static ArcSet from_arcs(std::vector<std::pair<double, double>> arcs);

  const std::vector<std::pair<double, double>>& arcs() const { return arcs_; }
  double measure() const;
  bool empty() const { return arcs_.empty(); }
  std::string label() const;

 private:
  std::vector<std::pair<double, double>> arcs_;
};

// Samples of w(theta) = a(r e^{i theta}) and its first three theta
// derivatives on the uniform grid theta_j = -pi + 2 pi j / M.
class AnalyticCircle {
 public:
  AnalyticCircle(const ComplexSeries& a, double r, std::size_t grid);

  double radius() const { return r_; }
  std::size_t grid() const { return w_.size(); }
  double cell() const { return cell_; }
  double theta(std::size_t j) const { return -kPi + cell_ * double(j); }

  const std::vector<Complex>& w() const { return w_; }
  const std::vector<Complex>& dw() const { return dw_; }
  const std::vector<Complex>& d2w() const { return d2w_; }
  const std::vector<Complex>& d3w() const { return d3w_; }

  static constexpr double kPi = 3.14159265358979323846;

 private:
  double r_;
  double cell_;
  std::vector<Complex> w_, dw_, d2w_, d3w_;
};

// A real profile u(theta) = sign * (Re or Im) w(theta) with derivative
// arrays.  Between grid nodes the profile is modeled by the quintic Hermite
// interpolant of (u, u', u''), which is what the quadrature and the
// level-crossing search operate on.
class Profile {
 public:
  enum class Part { Re, Im };

  Profile(const AnalyticCircle& circle, Part part, double sign);

  std::size_t grid() const { return u_.size(); }
  double cell() const { return cell_; }
  double theta(std::size_t j) const { return -AnalyticCircle::kPi + cell_ * double(j); }

  const std::vector<double>& u() const { return u_; }
  const std::vector<double>& u1() const { return u1_; }
  const std::vector<double>& u2() const { return u2_; }
  const std::vector<double>& u3() const { return u3_; }

  double value(double theta) const;
  double deriv(double theta) const;
  double min() const { return min_; }
  double max() const { return max_; }
  // Value with superlevel sample measure closest to q * 2 pi (q in [0, 1]);
  // q = 0.5 is the sample median.
  double quantile(double q) const;

  // Crossing angles of u = level, sorted, in [-pi, pi).  Tangential contacts
  // may be missed; integrands built on these vanish there, so downstream
  // quadrature is unaffected.
  std::vector<double> crossings(double level) const;
  // Maximal intervals of {u > level} as subsets of [-pi, pi]; a component
  // wrapping through +-pi appears as two entries.
  std::vector<std::pair<double, double>> super_level_intervals(double level) const;

 private:
  double cell_;
  double min_ = 0.0, max_ = 0.0;
  std::vector<double> u_, u1_, u2_, u3_;
  mutable std::vector<double> sorted_;  // built on first quantile() call
};

// Trapezoid-with-corrections quadrature of a smooth integrand given by node
// arrays g, g', g'', g''' on the periodic grid.  Arc integrals use the
// composite trapezoid over interior nodes, Euler-Maclaurin endpoint
// corrections -(h^2/12) g' + (h^4/720) g''', and exact integration of the
// quintic Hermite cell model over partial end cells.
class ArcQuadrature {
 public:
  ArcQuadrature(std::vector<double> g, std::vector<double> g1,
                std::vector<double> g2, std::vector<double> g3);

  // Builds the arrays for Phi composed with the profile by the chain rule.
  // Phi must be smooth on the whole line (no kinks).
  ArcQuadrature(const Profile& u, const ConvexGauge& phi);

  double full_circle() const;
  double over_arc(double a, double b) const;
  double over(const std::vector<std::pair<double, double>>& intervals) const;
  double over(const ArcSet& e) const;

 private:
  double cell_integral(std::size_t j, double s0, double s1) const;

  double cell_;
  std::vector<double> g_, g1_, g2_, g3_;
  std::vector<double> prefix_;  // prefix_[j] = sum of g_[0..j-1]
};

// Integrals of (Phi(u) - Phi(tau))^+ over the circle for a descending list
// of levels tau, computed by tracking the growing superlevel set {u > tau}.
// Used by the star-function domination check: by convex duality,
//   (Phi o u)*(theta) <= excess[k] + 2 theta Phi(tau_k)  for every theta,
// with equality when tau_k is the rearranged level of u at theta.
struct DualTable {
  std::vector<double> excess;   // integral of (Phi(u) - Phi(tau_k))^+
  std::vector<double> measure;  // |{u > tau_k}|
};

DualTable dual_table(const Profile& u, const ConvexGauge& phi,
                     const std::vector<double>& taus_descending);

// integral over E of Phi(u(theta)) dtheta; hinge kinks are split exactly.
double gauge_arc_integral(const Profile& u, const ConvexGauge& phi,
                          const ArcSet& e);

// --- headline functionals ---

// Arclength of the image of |z| = r: integral of r |f'(r e^{i theta})|.
double arclength(const MemberFunction& m, double r, std::size_t grid = 0);

// Integral of gauge(log f'(r e^{i theta})) d theta over the full circle.
// A LogAbs integrand that clamps anywhere triggers one grid doubling; if it
// clamps everywhere (the identity member) the result is -infinity.
double integral_mean(const MemberFunction& m, const SubharmonicGauge& gauge,
                     double r, std::size_t grid = 0);

// Integral of r |f'| over E.
double partial_arclength(const MemberFunction& m, const ArcSet& e, double r,
                         std::size_t grid = 0);

// Integral of phi(log |f'|) over E; phi must be nondecreasing.
double partial_mean(const MemberFunction& m, const ConvexGauge& phi,
                    const ArcSet& e, double r, std::size_t grid = 0);

// --- arc-set construction helpers for sweeps ---

// 1 to max_arcs disjoint arcs with uniformly random endpoints.
ArcSet random_arcset(std::mt19937_64& rng, std::size_t max_arcs = 4);

// Union of the grid cells with the largest cell-average of u, greedily taken
// until the requested measure is reached (rounded to whole cells).
ArcSet greedy_top_cells(const Profile& u, double target_measure);

}  // namespace arcmax
