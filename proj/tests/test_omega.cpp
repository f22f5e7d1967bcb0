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

#include <cmath>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "arcmax/omega.hpp"

using arcmax::Complex;
using arcmax::ComplexSeries;
using arcmax::OmegaDomain;

TEST_SUITE_BEGIN("unit.omega");

TEST_CASE("half-plane map coefficients are (1, 2-2b, 2-2b, ...)") {
  auto d0 = OmegaDomain::half_plane(0.0);
  auto phi0 = d0.phi_series(32);
  CHECK(phi0[0] == Complex{1.0, 0.0});
  for (std::size_t n = 1; n <= 32; ++n) CHECK(phi0[n] == Complex{2.0, 0.0});

  auto dw = OmegaDomain::half_plane(-0.5);
  auto phiw = dw.phi_series(32);
  CHECK(phiw[0] == Complex{1.0, 0.0});
  for (std::size_t n = 1; n <= 32; ++n) CHECK(phiw[n] == Complex{3.0, 0.0});
}

TEST_CASE("sector map starts at 2 alpha and squares to the half-plane map") {
  auto d = OmegaDomain::sector(0.5);
  auto phi = d.phi_series(64);
  CHECK(phi[0] == Complex{1.0, 0.0});
  CHECK(std::abs(phi[1] - Complex{1.0, 0.0}) <= 1e-14);
  // Oracle: phi^2 must be (1+z)/(1-z), whose coefficients are 1, 2, 2, ...
  auto sq = arcmax::multiply(phi, phi);
  CHECK(std::abs(sq[0] - Complex{1.0, 0.0}) <= 1e-13);
  for (std::size_t n = 1; n <= 64; ++n) {
    CHECK(std::abs(sq[n] - Complex{2.0, 0.0}) <= 1e-12);
  }
}

TEST_CASE("sector with full opening degenerates to the right half-plane") {
  auto s = OmegaDomain::sector(1.0).phi_series(48);
  auto h = OmegaDomain::half_plane(0.0).phi_series(48);
  for (std::size_t n = 0; n <= 48; ++n) {
    CHECK(std::abs(s[n] - h[n]) <= 1e-12);
  }
}

TEST_CASE("requesting a higher order preserves the low-order coefficients") {
  for (auto d : {OmegaDomain::half_plane(0.25), OmegaDomain::sector(0.7)}) {
    auto lo = d.phi_series(64);
    auto hi = d.phi_series(128);
    for (std::size_t n = 0; n <= 64; ++n) CHECK(lo[n] == hi[n]);
  }
}

TEST_CASE("parameter ranges are enforced") {
  CHECK_THROWS_AS(OmegaDomain::half_plane(-0.51), std::invalid_argument);
  CHECK_THROWS_AS(OmegaDomain::half_plane(1.0), std::invalid_argument);
  CHECK_THROWS_AS(OmegaDomain::sector(0.0), std::invalid_argument);
  CHECK_THROWS_AS(OmegaDomain::sector(1.01), std::invalid_argument);
  CHECK_NOTHROW(OmegaDomain::half_plane(-0.5));
  CHECK_NOTHROW(OmegaDomain::sector(1.0));
}

TEST_CASE("half-plane starlikeness margin matches Re[1/(1-z)] >= 1/(1+rho)") {
  auto d = OmegaDomain::half_plane(0.0);
  for (double rho : {0.3, 0.6, 0.9}) {
    auto res = d.check_starlike(rho, 1024);
    CHECK(res.passed);
    CHECK(res.margin == doctest::Approx(1.0 / (1.0 + rho)).epsilon(1e-9));
  }
}

TEST_CASE("starlikeness margin is nonincreasing in the probe radius") {
  for (auto d : {OmegaDomain::half_plane(-0.5), OmegaDomain::sector(0.5)}) {
    double prev = 1e300;
    for (double rho : {0.3, 0.6, 0.9, 0.95}) {
      auto res = d.check_starlike(rho, 1024);
      CHECK(res.passed);
      CHECK(res.margin <= prev + 1e-12);
      prev = res.margin;
    }
  }
}

TEST_CASE("custom domains require an explicit probe before being trusted") {
  ComplexSeries phi(8);
  phi[0] = Complex{1.0, 0.0};
  phi[2] = Complex{5.0, 0.0};
  auto d = OmegaDomain::custom(phi);
  CHECK(!d.starlike_verified());
  // 1 + 5 z^2 has probe quotient identically 2; the flag follows the probe.
  CHECK(d.verify_starlike(0.9, 512));
  CHECK(d.starlike_verified());
}

TEST_CASE("a probe failure leaves the domain unverified") {
  ComplexSeries phi(8);
  phi[0] = Complex{1.0, 0.0};
  phi[1] = Complex{1.0, 0.0};
  phi[2] = Complex{-3.0, 0.0};
  auto d = OmegaDomain::custom(phi);
  // q(z) = (1-6z)/(1-3z) has Re q(0.3) = -8, so the probe at rho = 0.3 fails.
  auto res = d.check_starlike(0.3, 512);
  CHECK(!res.passed);
  CHECK(res.margin == doctest::Approx(-8.0).epsilon(1e-9));
  CHECK(!d.verify_starlike(0.3, 512));
  CHECK(!d.starlike_verified());
}

TEST_CASE("probe detects phi = 1 degeneracy on the circle") {
  ComplexSeries phi(8);
  phi[0] = Complex{1.0, 0.0};
  phi[1] = Complex{1.0, 0.0};
  phi[2] = Complex{-3.0, 0.0};
  auto d = OmegaDomain::custom(phi);
  // phi - 1 = z - 3 z^2 vanishes at z = 1/3, which the grid hits at theta = 0.
  CHECK_THROWS_AS(d.check_starlike(1.0 / 3.0, 512), std::runtime_error);
}

TEST_CASE("symmetry check accepts the catalog and rejects rotated domains") {
  CHECK(OmegaDomain::half_plane(0.3).check_symmetric());
  CHECK(OmegaDomain::sector(0.25).check_symmetric());
  ComplexSeries phi(4);
  phi[0] = Complex{1.0, 0.0};
  phi[1] = Complex{0.0, 2.0};
  CHECK(!OmegaDomain::custom(phi).check_symmetric());
}

TEST_CASE("json round trip preserves the domain") {
  for (auto d : {OmegaDomain::half_plane(-0.5), OmegaDomain::sector(0.25)}) {
    nlohmann::json j = d;
    auto back = OmegaDomain::from_json(j);
    CHECK(back.label() == d.label());
    auto a = d.phi_series(16);
    auto b = back.phi_series(16);
    for (std::size_t n = 0; n <= 16; ++n) CHECK(a[n] == b[n]);
  }
  nlohmann::json j = {{"kind", "custom"}, {"coeffs", {{1.0, 0.0}, {0.5, 0.25}}}};
  auto d = OmegaDomain::from_json(j);
  CHECK(d.kind() == OmegaDomain::Kind::Custom);
  CHECK(d.phi_series(4)[1] == Complex{0.5, 0.25});
  CHECK_THROWS_AS(OmegaDomain::from_json(nlohmann::json{{"kind", "oval"}}),
                  std::invalid_argument);
}

TEST_SUITE_END();
