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

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "arcmax/members.hpp"
#include "arcmax/omega.hpp"
#include "arcmax/series.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace {

using arcmax::Complex;
using arcmax::ComplexSeries;
using arcmax::JordanCurveSamples;
using arcmax::MemberFunction;
using arcmax::OmegaDomain;

constexpr double kPi = 3.14159265358979323846;

OmegaDomain verified(OmegaDomain dom) {
  REQUIRE(dom.verify_starlike());
  return dom;
}

// z as a truncated series, handy for circle-image fixtures.
ComplexSeries identity_series(std::size_t order) {
  ComplexSeries s(order);
  s[1] = Complex{1.0, 0.0};
  return s;
}

}  // namespace

TEST_SUITE("unit.subordination") {

TEST_CASE("curve construction, orientation, and winding containment") {
  const std::vector<Complex> square = {{1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}};
  const auto curve = JordanCurveSamples::from_points(square);
  CHECK(curve.orientation() == 1);
  CHECK(curve.diameter() == doctest::Approx(std::hypot(2.0, 2.0)).epsilon(1e-15));
  CHECK(curve.contains(Complex{0.0, 0.0}));
  CHECK(curve.contains(Complex{0.9, 0.9}));
  CHECK_FALSE(curve.contains(Complex{3.0, 0.0}));
  CHECK_FALSE(curve.contains(Complex{0.0, -2.5}));
  CHECK(curve.distance_to(Complex{0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(curve.distance_to(Complex{2.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(curve.distance_to(Complex{2.0, 2.0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  auto reversed = square;
  std::reverse(reversed.begin(), reversed.end());
  const auto cw = JordanCurveSamples::from_points(reversed);
  CHECK(cw.orientation() == -1);
  CHECK(cw.contains(Complex{0.0, 0.0}));
  CHECK_FALSE(cw.contains(Complex{3.0, 0.0}));

  // Near-boundary queries are indeterminate once a band is requested.
  CHECK_THROWS_AS(curve.contains(Complex{0.999, 0.0}, 0.01), std::domain_error);
  CHECK_NOTHROW(curve.contains(Complex{0.9, 0.0}, 0.01));

  CHECK_THROWS_AS(JordanCurveSamples::from_points({{0, 0}, {1, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      JordanCurveSamples::from_points({{0, 0}, {1, 0}, {2, 0}, {3, 0}}),  // collinear
      std::invalid_argument);
  const double bad = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(JordanCurveSamples::from_points({{0, 0}, {1, 0}, {1, 1}, {bad, 0}}),
                  std::invalid_argument);
}

TEST_CASE("curves sampled from series: circle and extremal image") {
  const auto circle = JordanCurveSamples::from_series(identity_series(8), 0.5, 64);
  CHECK(circle.points().size() == 64);
  CHECK(circle.orientation() == 1);
  CHECK(circle.contains(Complex{0.0, 0.0}));
  CHECK(circle.contains(Complex{0.4, 0.0}));
  CHECK_FALSE(circle.contains(Complex{0.7, 0.0}));
  // Distance from center to an inscribed 64-gon is within sagitta of r.
  CHECK(circle.distance_to(Complex{0.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-2));

  const auto dom = verified(OmegaDomain::half_plane(0.0));
  const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);
  const auto image = JordanCurveSamples::from_series(k.log_fprime, 0.9, 0);
  CHECK(image.points().size() == arcmax::default_grid(arcmax::kDefaultOrder));
  CHECK(image.contains(Complex{0.0, 0.0}));  // log k'(0) = 0 is interior
  // Rightmost point is log k'(0.9) = -2 log(0.1), leftmost -2 log(1.9).
  CHECK(image.contains(Complex{-2.0 * std::log(1.9) + 0.05, 0.0}));
  CHECK_FALSE(image.contains(Complex{-2.0 * std::log(1.9) - 0.05, 0.0}));
  CHECK(image.contains(Complex{-2.0 * std::log(0.1) - 0.05, 0.0}));
  CHECK_FALSE(image.contains(Complex{-2.0 * std::log(0.1) + 0.05, 0.0}));
}

TEST_CASE("discrete convexity of closed polylines") {
  const auto circle = JordanCurveSamples::from_series(identity_series(8), 0.5, 64);
  const auto conv = arcmax::check_convexity(circle);
  CHECK(conv.convex);
  // Every corner of a regular 64-gon turns by 2 pi / 64.
  CHECK(conv.margin == doctest::Approx(std::sin(2.0 * kPi / 64.0)).epsilon(1e-12));

  const auto dom = verified(OmegaDomain::half_plane(0.0));
  const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);
  const auto image = JordanCurveSamples::from_series(k.log_fprime, 0.9, 0);
  const auto iconv = arcmax::check_convexity(image);
  CHECK(iconv.convex);
  CHECK(iconv.margin > 0.0);

  const auto dented = JordanCurveSamples::from_points(
      {{0.0, 0.0}, {4.0, 0.0}, {1.0, 1.0}, {0.0, 4.0}});
  const auto dconv = arcmax::check_convexity(dented);
  CHECK_FALSE(dconv.convex);
  CHECK(dconv.margin < -0.1);
  CHECK(dented.contains(Complex{0.5, 0.5}));
  CHECK_FALSE(dented.contains(Complex{2.0, 2.0}));  // inside hull, outside dent
}

TEST_CASE("matched radii reproduce the boundary equality case") {
  for (auto dom : {verified(OmegaDomain::half_plane(0.0)),
                   verified(OmegaDomain::sector(0.5))}) {
    const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);
    const auto rep =
        arcmax::check_subordination(k.log_fprime, k.log_fprime, 0.6, 0.6, 0);
    CHECK(rep.pass);
    CHECK(rep.boundary_case);
    CHECK(rep.outside == 0);
    CHECK(rep.inside == 0);  // samples coincide with the outer vertices
    CHECK(rep.on_boundary == arcmax::default_grid(arcmax::kDefaultOrder));
    CHECK_FALSE(rep.refined);
    CHECK(std::abs(rep.min_signed_distance) <= rep.band);
  }
}

TEST_CASE("rotations stay within the boundary band at equal radii") {
  const auto dom = verified(OmegaDomain::half_plane(0.0));
  const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);
  const MemberFunction rot = arcmax::rotate(k, std::polar(1.0, 0.7));
  const auto rep =
      arcmax::check_subordination(rot.log_fprime, k.log_fprime, 0.9, 0.9, 0);
  CHECK(rep.pass);
  CHECK(rep.boundary_case);
  CHECK(rep.outside == 0);
  CHECK(rep.on_boundary > 0);
  // Off-vertex samples sit on the true curve, outside the chord polygon by
  // at most the sagitta that defines the band.
  CHECK(rep.min_signed_distance >= -rep.band);
  CHECK(rep.min_signed_distance <= 0.0);
  CHECK(rep.band < 1e-3);
}

TEST_CASE("strict members sit strictly inside with shrinking clearance") {
  const auto dom = verified(OmegaDomain::half_plane(0.0));
  const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);

  // The straight line f(z) = z has log f' = 0, interior at every radius.
  const ComplexSeries zero(arcmax::kDefaultOrder);
  const auto line = arcmax::check_subordination(zero, k.log_fprime, 0.3, 0.3, 0);
  CHECK(line.pass);
  CHECK_FALSE(line.boundary_case);
  CHECK(line.on_boundary == 0);
  CHECK(line.min_signed_distance > 0.1);

  // A squared-variable composition pulls the image strictly inward.  Its
  // log-derivative is -log(1 - z^2), so the clearance to the outer curve at
  // the negative real axis is 2 log(1 + r) - log(1 + r^2), increasing in r.
  const MemberFunction sq = arcmax::random_member(
      dom, arcmax::SchwarzSpec::monomial(Complex{1.0, 0.0}, 2), arcmax::kDefaultOrder,
      "sq");
  double previous = 0.0;
  for (double r : {0.3, 0.6, 0.9}) {
    const auto rep = arcmax::check_subordination(sq.log_fprime, k.log_fprime, r, r, 0);
    CHECK(rep.pass);
    CHECK(rep.on_boundary == 0);
    CHECK(rep.outside == 0);
    CHECK(rep.min_signed_distance > rep.band);
    CHECK(rep.min_signed_distance > previous);
    const double clearance = 2.0 * std::log(1.0 + r) - std::log(1.0 + r * r);
    CHECK(rep.min_signed_distance == doctest::Approx(clearance).epsilon(1e-3));
    previous = rep.min_signed_distance;
  }

  // Nested radii keep the extremal itself strictly inside; the gap on the
  // negative real axis is 2 log(1.8 / 1.5).
  const auto nested = arcmax::check_subordination(k.log_fprime, k.log_fprime, 0.5, 0.8, 0);
  CHECK(nested.pass);
  CHECK(nested.on_boundary == 0);
  CHECK(nested.min_signed_distance ==
        doctest::Approx(2.0 * std::log(1.8 / 1.5)).epsilon(1e-3));
}

TEST_CASE("random catalog members satisfy subordination at all radii") {
  std::mt19937_64 rng(20260814u);
  for (auto dom : {verified(OmegaDomain::half_plane(-0.5)),
                   verified(OmegaDomain::half_plane(0.0)),
                   verified(OmegaDomain::sector(0.5))}) {
    const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);
    for (int i = 0; i < 5; ++i) {
      const auto spec = arcmax::random_schwarz_spec(rng);
      const MemberFunction m =
          arcmax::random_member(dom, spec, arcmax::kDefaultOrder, "m" + std::to_string(i));
      for (double r : {0.3, 0.6, 0.9}) {
        const auto rep =
            arcmax::check_subordination(m.log_fprime, k.log_fprime, r, r, 1024);
        CAPTURE(dom.label());
        CAPTURE(spec.label());
        CAPTURE(r);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("a profile leaving the half-plane is rejected") {
  const auto dom = verified(OmegaDomain::half_plane(0.0));
  const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);
  // Fake member with curvature profile 1 + 3z: log f' = 3z exits the image
  // of log k' on the left of the plane at r = 0.9.
  ComplexSeries fake(arcmax::kDefaultOrder);
  fake[1] = Complex{3.0, 0.0};
  const auto rep = arcmax::check_subordination(fake, k.log_fprime, 0.9, 0.9, 0);
  CHECK_FALSE(rep.pass);
  CHECK(rep.outside > 0);
  CHECK(rep.refined);  // the miss is confirmed against a doubled outer grid
  CHECK(rep.min_signed_distance < -1.0);
  CHECK(rep.worst_point.real() < -2.0);
}

TEST_CASE("subordination input validation") {
  const auto dom = verified(OmegaDomain::half_plane(0.0));
  const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);
  CHECK_THROWS_AS(arcmax::check_subordination(k.log_fprime, k.log_fprime, 0.8, 0.5, 0),
                  std::domain_error);
  CHECK_THROWS_AS(arcmax::check_subordination(k.log_fprime, k.log_fprime, 0.0, 0.5, 0),
                  std::domain_error);
  CHECK_THROWS_AS(arcmax::check_subordination(k.log_fprime, k.log_fprime, 0.5, 0.96, 0),
                  std::domain_error);
}

TEST_CASE("angular derivative identity matches the half-plane closed form") {
  const auto dom = verified(OmegaDomain::half_plane(0.0));
  const double r = 0.6;
  const auto rep = arcmax::check_derivative_identity(dom, r);
  CHECK(rep.pass);
  CHECK(rep.max_abs_error < 1e-9);
  // The grid minimum of Im phi sits one cell from theta = pi, where
  // 2 r sin(2 pi / m) / (1 + r)^2 is about 7.2e-4 at r = 0.6, m = 4096.
  CHECK(rep.negativity_margin > 5e-4);
  CHECK(rep.negativity_margin < 1e-3);

  // Independent closed form: d/dtheta log|k'| = -2 r sin t / (1 - 2 r cos t + r^2).
  const MemberFunction k = arcmax::extremal(dom, arcmax::kDefaultOrder);
  ComplexSeries dlog(arcmax::kDefaultOrder);
  for (std::size_t n = 0; n <= dlog.order(); ++n) {
    dlog[n] = k.log_fprime[n] * Complex{0.0, static_cast<double>(n)};
  }
  const auto samples = arcmax::eval_on_circle(dlog, r, 4096);
  for (std::size_t j = 0; j < samples.grid(); j += 7) {
    const double t = samples.theta(j);
    const double expected = -2.0 * r * std::sin(t) / (1.0 - 2.0 * r * std::cos(t) + r * r);
    CHECK(samples.values[j].real() == doctest::Approx(expected).epsilon(5e-13));
  }
  // Both sides vanish on the symmetry axis.
  const std::size_t m = samples.grid();
  CHECK(std::abs(samples.values[m / 2].real()) < 1e-12);  // theta = 0
  CHECK(std::abs(samples.values[0].real()) < 1e-12);      // theta = -pi
}

TEST_CASE("angular derivative identity across the catalog") {
  for (auto dom : {verified(OmegaDomain::half_plane(-0.5)),
                   verified(OmegaDomain::half_plane(0.25)),
                   verified(OmegaDomain::sector(0.5)),
                   verified(OmegaDomain::sector(1.0))}) {
    for (double r : {0.3, 0.7}) {
      const auto rep = arcmax::check_derivative_identity(dom, r);
      CAPTURE(dom.label());
      CAPTURE(r);
      CHECK(rep.pass);
      CHECK(rep.max_abs_error < 1e-9);
      CHECK(rep.negativity_margin > 0.0);
    }
  }

  // Asymmetric domains have no monotone profile to certify.
  ComplexSeries tilted(8);
  tilted[0] = Complex{1.0, 0.0};
  tilted[1] = Complex{0.0, 0.4};
  auto bad = OmegaDomain::custom(tilted);
  CHECK_THROWS_AS(arcmax::check_derivative_identity(bad, 0.5), std::invalid_argument);
}

}  // TEST_SUITE
