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

#include "arcmax/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "arcmax/members.hpp"

namespace arcmax {

namespace {

constexpr double kConvexTol = 1e-12;    // normalized-cross slack for convexity
constexpr double kBandFloorRel = 1e-9;  // band floor relative to curve diameter

double cross2(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

// Signed distance from w to the supporting line of segment a -> b; positive
// on the left of the edge, which is the interior side of a ccw polygon.
double edge_signed_distance(Complex a, Complex b, Complex w) {
  const Complex e = b - a;
  const double len = std::abs(e);
  if (len == 0.0) return std::numeric_limits<double>::infinity();
  return cross2(e, w - a) / len;
}

double segment_distance(Complex a, Complex b, Complex w) {
  const Complex e = b - a;
  const double len2 = std::norm(e);
  if (len2 == 0.0) return std::abs(w - a);
  double t = ((w.real() - a.real()) * e.real() + (w.imag() - a.imag()) * e.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(w - (a + t * e));
}

// Interior-point wedge locator for a convex polygon.  Vertices are stored in
// ccw order rotated so the polar angles about the vertex centroid increase;
// each query point is matched to its angular wedge with a binary search and
// tested against that wedge's polygon edge and its two neighbors.
class ConvexLocator {
 public:
  explicit ConvexLocator(const JordanCurveSamples& curve) {
    pts_ = curve.points();
    if (curve.orientation() < 0) std::reverse(pts_.begin(), pts_.end());
    const std::size_t m = pts_.size();
    Complex sum{0.0, 0.0};
    for (const Complex& p : pts_) sum += p;
    center_ = sum / static_cast<double>(m);

    std::vector<double> ang(m);
    for (std::size_t j = 0; j < m; ++j) {
      ang[j] = std::atan2(pts_[j].imag() - center_.imag(), pts_[j].real() - center_.real());
    }
    const std::size_t start =
        static_cast<std::size_t>(std::min_element(ang.begin(), ang.end()) - ang.begin());
    std::rotate(pts_.begin(), pts_.begin() + static_cast<std::ptrdiff_t>(start), pts_.end());
    ang_.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      ang_[j] = std::atan2(pts_[j].imag() - center_.imag(), pts_[j].real() - center_.real());
    }
  }

  // Signed distance to the boundary near w (positive inside).  Exact in the
  // band around the located edge, a same-sign underestimate elsewhere.
  double signed_distance(Complex w) const {
    const std::size_t m = pts_.size();
    const double g = std::atan2(w.imag() - center_.imag(), w.real() - center_.real());
    auto it = std::upper_bound(ang_.begin(), ang_.end(), g);
    std::size_t idx = (it == ang_.begin()) ? m - 1
                                           : static_cast<std::size_t>(it - ang_.begin()) - 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t off = m - 1; off <= m + 1; ++off) {
      const std::size_t i = (idx + off) % m;
      best = std::min(best, edge_signed_distance(pts_[i], pts_[(i + 1) % m], w));
    }
    return best;
  }

 private:
  std::vector<Complex> pts_;
  std::vector<double> ang_;
  Complex center_{0.0, 0.0};
};

struct Classification {
  std::size_t inside = 0;
  std::size_t on_boundary = 0;
  std::size_t outside = 0;
  bool convex_outer = false;
  double band = 0.0;
  double min_signed = std::numeric_limits<double>::infinity();
  Complex worst{0.0, 0.0};
};

double boundary_band(const JordanCurveSamples& curve) {
  const auto& p = curve.points();
  const std::size_t m = p.size();
  double sagitta = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Complex second = p[(j + 1) % m] - 2.0 * p[j] + p[(j + m - 1) % m];
    sagitta = std::max(sagitta, std::abs(second) / 8.0);
  }
  return std::max(kBandFloorRel * curve.diameter(), sagitta);
}

Classification classify_against(const std::vector<Complex>& queries,
                                const JordanCurveSamples& curve) {
  Classification c;
  c.band = boundary_band(curve);
  c.convex_outer = check_convexity(curve).convex;

  std::optional<ConvexLocator> locator;
  if (c.convex_outer) locator.emplace(curve);
  for (const Complex& w : queries) {
    double d = 0.0;
    if (locator) {
      d = locator->signed_distance(w);
    } else {
      d = curve.distance_to(w) * (curve.contains(w) ? 1.0 : -1.0);
    }
    if (d < c.min_signed) {
      c.min_signed = d;
      c.worst = w;
    }
    if (d > c.band) {
      ++c.inside;
    } else if (d < -c.band) {
      ++c.outside;
    } else {
      ++c.on_boundary;
    }
  }
  return c;
}

void fill_report(const Classification& c, SubordinationReport& rep) {
  rep.inside = c.inside;
  rep.on_boundary = c.on_boundary;
  rep.outside = c.outside;
  rep.convex_outer = c.convex_outer;
  rep.band = c.band;
  rep.min_signed_distance = c.min_signed;
  rep.worst_point = c.worst;
}

}  // namespace

JordanCurveSamples JordanCurveSamples::from_points(std::vector<Complex> points) {
  if (points.size() < 4) {
    throw std::invalid_argument("curve needs at least 4 sample points");
  }
  for (const Complex& p : points) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      throw std::invalid_argument("curve samples must be finite");
    }
  }
  const std::size_t m = points.size();
  double area2 = 0.0;
  double xmin = points[0].real(), xmax = xmin;
  double ymin = points[0].imag(), ymax = ymin;
  for (std::size_t j = 0; j < m; ++j) {
    const Complex& a = points[j];
    const Complex& b = points[(j + 1) % m];
    area2 += cross2(a, b);
    xmin = std::min(xmin, a.real());
    xmax = std::max(xmax, a.real());
    ymin = std::min(ymin, a.imag());
    ymax = std::max(ymax, a.imag());
  }
  if (area2 == 0.0) {
    throw std::invalid_argument("curve encloses no area");
  }
  JordanCurveSamples curve;
  curve.points_ = std::move(points);
  curve.orientation_ = area2 > 0.0 ? 1 : -1;
  curve.diameter_ = std::hypot(xmax - xmin, ymax - ymin);
  return curve;
}

JordanCurveSamples JordanCurveSamples::from_series(const ComplexSeries& a, double r,
                                                   std::size_t grid) {
  const std::size_t m = grid != 0 ? grid : default_grid(a.order());
  CircleSamples samples = eval_on_circle(a, r, m);
  return from_points(std::move(samples.values));
}

bool JordanCurveSamples::contains(Complex w, double dist_tol) const {
  if (dist_tol > 0.0 && distance_to(w) <= dist_tol) {
    throw std::domain_error("point lies within the boundary band; containment is indeterminate");
  }
  const std::size_t m = points_.size();
  int winding = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const Complex& a = points_[j];
    const Complex& b = points_[(j + 1) % m];
    if (a.imag() <= w.imag()) {
      if (b.imag() > w.imag() && cross2(b - a, w - a) > 0.0) ++winding;
    } else {
      if (b.imag() <= w.imag() && cross2(b - a, w - a) < 0.0) --winding;
    }
  }
  return winding != 0;
}

double JordanCurveSamples::distance_to(Complex w) const {
  const std::size_t m = points_.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    best = std::min(best, segment_distance(points_[j], points_[(j + 1) % m], w));
  }
  return best;
}

ConvexityReport check_convexity(const JordanCurveSamples& curve) {
  const auto& p = curve.points();
  const std::size_t m = p.size();
  const double sign = curve.orientation();
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    const Complex e1 = p[(j + 1) % m] - p[j];
    const Complex e2 = p[(j + 2) % m] - p[(j + 1) % m];
    const double n1 = std::abs(e1);
    const double n2 = std::abs(e2);
    if (n1 == 0.0 || n2 == 0.0) continue;  // repeated sample, no turn to test
    margin = std::min(margin, sign * cross2(e1, e2) / (n1 * n2));
  }
  ConvexityReport rep;
  rep.margin = margin;
  rep.convex = margin >= -kConvexTol;
  return rep;
}

SubordinationReport check_subordination(const ComplexSeries& inner_log_fprime,
                                        const ComplexSeries& outer_log_kprime,
                                        double r_inner, double r_outer,
                                        std::size_t grid) {
  if (!(r_inner > 0.0) || !(r_inner <= r_outer) || !(r_outer <= kRMax)) {
    throw std::domain_error("subordination radii must satisfy 0 < r_inner <= r_outer <= 0.95");
  }
  const std::size_t m =
      grid != 0 ? grid
                : default_grid(std::max(inner_log_fprime.order(), outer_log_kprime.order()));
  const CircleSamples inner = eval_on_circle(inner_log_fprime, r_inner, m);

  SubordinationReport rep;
  JordanCurveSamples outer = JordanCurveSamples::from_series(outer_log_kprime, r_outer, m);
  Classification c = classify_against(inner.values, outer);
  if (c.outside > 0) {
    // A miss at base resolution may be discretization of the outer curve;
    // retry against a doubled outer grid while keeping the same queries.
    outer = JordanCurveSamples::from_series(outer_log_kprime, r_outer, 2 * m);
    c = classify_against(inner.values, outer);
    rep.refined = true;
  }
  fill_report(c, rep);
  rep.pass = rep.outside == 0;
  rep.boundary_case = rep.pass && rep.on_boundary > 0;
  return rep;
}

DerivativeIdentityReport check_derivative_identity(const OmegaDomain& domain, double r,
                                                   std::size_t grid, std::size_t order,
                                                   double tol) {
  if (!domain.check_symmetric()) {
    throw std::invalid_argument("derivative identity requires a conjugation-symmetric domain");
  }
  const MemberFunction k = extremal(domain, order);
  const std::size_t m = grid != 0 ? grid : default_grid(order);

  // Angular derivative of log|k'| on |z| = r, taken spectrally from the
  // constructed series: d/dtheta sum c_n (r e^{i theta})^n has coefficients
  // c_n * (i n).
  ComplexSeries dlog(order);
  for (std::size_t n = 0; n <= order; ++n) {
    dlog[n] = k.log_fprime[n] * Complex(0.0, static_cast<double>(n));
  }
  const CircleSamples lhs = eval_on_circle(dlog, r, m);
  const CircleSamples phi = eval_on_circle(domain.phi_series(order), r, m);

  DerivativeIdentityReport rep;
  rep.negativity_margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    const double err = std::abs(lhs.values[j].real() - (-phi.values[j].imag()));
    rep.max_abs_error = std::max(rep.max_abs_error, err);
  }
  // theta_j = -pi + 2 pi j / m lies in (0, pi) exactly for j in [m/2+1, m-1];
  // strict monotone decay of log|k'| on the upper semicircle needs Im phi > 0
  // there.
  for (std::size_t j = m / 2 + 1; j < m; ++j) {
    rep.negativity_margin = std::min(rep.negativity_margin, phi.values[j].imag());
  }
  rep.pass = rep.max_abs_error <= tol && rep.negativity_margin > 0.0;
  return rep;
}

}  // namespace arcmax
