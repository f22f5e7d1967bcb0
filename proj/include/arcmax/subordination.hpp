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
// Subordination geometry: Jordan-curve containment tests for the relation
// log f' subordinate to log k', a discrete convexity probe for image
// curves, and the angular-derivative identity that drives the monotone
// profile of the extremal function.

#pragma once

#include <cstddef>
#include <vector>

#include "arcmax/omega.hpp"
#include "arcmax/series.hpp"

namespace arcmax {

// Closed polyline through samples of a univalent curve.  Orientation is the
// sign of the shoelace area and must be nonzero.
class JordanCurveSamples {
 public:
  static JordanCurveSamples from_points(std::vector<Complex> points);
  static JordanCurveSamples from_series(const ComplexSeries& a, double r,
                                        std::size_t grid = 0);

  const std::vector<Complex>& points() const { return points_; }
  int orientation() const { return orientation_; }  // +1 ccw, -1 cw
  double diameter() const { return diameter_; }     // bounding-box diagonal

  // Winding-number membership.  When dist_tol > 0 the point is first checked
  // against the polyline; results inside the band are indeterminate and
  // raise an error (shrink the inner radius instead of trusting them).
  bool contains(Complex w, double dist_tol = 0.0) const;

  // Minimum distance from w to the polyline segments.
  double distance_to(Complex w) const;

 private:
  JordanCurveSamples() = default;
  std::vector<Complex> points_;
  int orientation_ = 0;
  double diameter_ = 0.0;
};

// Discrete convexity of a closed polyline: all consecutive-edge cross
// products share the orientation sign.  margin is the smallest normalized
// cross product (negative means a concave corner).
struct ConvexityReport {
  bool convex = false;
  double margin = 0.0;
};

ConvexityReport check_convexity(const JordanCurveSamples& curve);

// Containment of the inner image samples in the outer image curve, the
// numerical form of subordination for univalent outer maps.  Inner samples
// within the boundary band count as "on boundary" (the equality case) and
// trigger one refinement pass with the outer curve at doubled resolution.
struct SubordinationReport {
  bool pass = false;            // no sample beyond the band
  bool boundary_case = false;   // pass, with some samples on the boundary
  bool convex_outer = false;    // support-line test used (else winding)
  bool refined = false;         // second pass at doubled outer resolution ran
  std::size_t inside = 0;
  std::size_t on_boundary = 0;
  std::size_t outside = 0;
  double min_signed_distance = 0.0;  // most inward-negative sample distance
  double band = 0.0;                 // tolerance actually used
  Complex worst_point{0.0, 0.0};
};

SubordinationReport check_subordination(const ComplexSeries& inner_log_fprime,
                                        const ComplexSeries& outer_log_kprime,
                                        double r_inner, double r_outer,
                                        std::size_t grid = 0);

// Identity check: the angular derivative of log|k'(r e^{i theta})| computed
// spectrally from the series must equal -Im phi(r e^{i theta}); the right
// side must be strictly negative on (0, pi) for symmetric domains.
struct DerivativeIdentityReport {
  double max_abs_error = 0.0;
  double negativity_margin = 0.0;  // min of Im phi over grid angles in (0, pi)
  bool pass = false;
};

DerivativeIdentityReport check_derivative_identity(const OmegaDomain& domain,
                                                   double r, std::size_t grid = 0,
                                                   std::size_t order = kDefaultOrder,
                                                   double tol = 1e-8);

}  // namespace arcmax
