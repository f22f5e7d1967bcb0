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
#include <cstring>
#include <random>

#include <doctest.h>

#include "arcmax/series.hpp"
#include "oracles.hpp"

using arcmax::Complex;
using arcmax::ComplexSeries;

namespace {

ComplexSeries geometric(std::size_t order) {
  ComplexSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s[n] = Complex{1.0, 0.0};
  return s;
}

double series_dist(const ComplexSeries& a, const ComplexSeries& b) {
  REQUIRE(a.order() == b.order());
  double d = 0.0;
  for (std::size_t n = 0; n <= a.order(); ++n) d = std::max(d, std::abs(a[n] - b[n]));
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("unit.series");

TEST_CASE("multiply matches the convolution oracle") {
  std::mt19937_64 rng(11u);
  for (int iter = 0; iter < 8; ++iter) {
    auto a = oracle::random_series(rng, 40, 1.0, false);
    auto b = oracle::random_series(rng, 40, 1.0, false);
    auto ref = oracle::convolve(a.coefficients(), b.coefficients(), 41);
    auto got = arcmax::multiply(a, b);
    for (std::size_t n = 0; n <= 40; ++n) {
      CHECK(std::abs(got[n] - ref[n]) <= 1e-13 * (1.0 + std::abs(ref[n])));
    }
  }
}

TEST_CASE("multiply is commutative and associative up to truncation") {
  std::mt19937_64 rng(12u);
  auto a = oracle::random_series(rng, 64, 0.7, false);
  auto b = oracle::random_series(rng, 64, 0.7, false);
  auto c = oracle::random_series(rng, 64, 0.7, false);
  CHECK(series_dist(arcmax::multiply(a, b), arcmax::multiply(b, a)) <= 1e-13);
  auto ab_c = arcmax::multiply(arcmax::multiply(a, b), c);
  auto a_bc = arcmax::multiply(a, arcmax::multiply(b, c));
  CHECK(series_dist(ab_c, a_bc) <= 1e-12);
}

TEST_CASE("multiply rejects mismatched orders") {
  ComplexSeries a(4), b(5);
  CHECK_THROWS_AS(arcmax::multiply(a, b), std::invalid_argument);
}

TEST_CASE("exp of -2 log(1-z) reproduces the binomial coefficients n+1") {
  // Oracle: (1-z)^{-2} = sum (n+1) z^n, checked independently of exp_series
  // by writing the expected coefficients directly.
  const std::size_t N = 128;
  ComplexSeries a(N);
  for (std::size_t n = 1; n <= N; ++n) a[n] = Complex{2.0 / static_cast<double>(n), 0.0};
  auto e = arcmax::exp_series(a);
  for (std::size_t n = 0; n <= N; ++n) {
    const double expect = static_cast<double>(n + 1);
    CHECK(std::abs(e[n] - Complex{expect, 0.0}) <= 1e-12 * expect);
  }
}

TEST_CASE("exp of z gives 1/n!") {
  const std::size_t N = 16;
  ComplexSeries a(N);
  a[1] = Complex{1.0, 0.0};
  auto e = arcmax::exp_series(a);
  double fact = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) fact *= static_cast<double>(n);
    CHECK(std::abs(e[n] - Complex{1.0 / fact, 0.0}) <= 1e-15 / fact + 1e-18);
  }
}

TEST_CASE("exp is a homomorphism up to truncation") {
  std::mt19937_64 rng(13u);
  auto a = oracle::random_series(rng, 48, 0.3, true);
  auto b = oracle::random_series(rng, 48, 0.3, true);
  ComplexSeries sum(48);
  for (std::size_t n = 0; n <= 48; ++n) sum[n] = a[n] + b[n];
  auto lhs = arcmax::exp_series(sum);
  auto rhs = arcmax::multiply(arcmax::exp_series(a), arcmax::exp_series(b));
  CHECK(series_dist(lhs, rhs) <= 1e-13 * std::max(1.0, rhs.max_abs()));
}

TEST_CASE("exp requires vanishing constant term") {
  ComplexSeries a(4);
  a[0] = Complex{0.5, 0.0};
  CHECK_THROWS_AS(arcmax::exp_series(a), std::invalid_argument);
}

TEST_CASE("integrate divides by n and drops the top coefficient") {
  std::mt19937_64 rng(14u);
  auto a = oracle::random_series(rng, 32, 1.0, false);
  auto b = arcmax::integrate(a);
  CHECK(b[0] == Complex{0.0, 0.0});
  for (std::size_t n = 1; n <= 32; ++n) {
    CHECK(b[n] == a[n - 1] / static_cast<double>(n));
  }
}

TEST_CASE("derivative then integrate round-trips below the top coefficient") {
  std::mt19937_64 rng(15u);
  auto a = oracle::random_series(rng, 512, 1.0, false);
  auto round = arcmax::derivative(arcmax::integrate(a));
  for (std::size_t n = 0; n + 1 <= 512; ++n) {
    CHECK(std::abs(round[n] - a[n]) <= 1e-13 * (1.0 + std::abs(a[n])));
  }
  CHECK(round[512] == Complex{0.0, 0.0});
}

TEST_CASE("divide_by_z shifts coefficients down") {
  // (h - 1)/z for h = (1+z)/(1-z): every coefficient is 2, top slot empty.
  const std::size_t N = 24;
  ComplexSeries hm1(N);
  for (std::size_t n = 1; n <= N; ++n) hm1[n] = Complex{2.0, 0.0};
  auto q = arcmax::divide_by_z(hm1);
  for (std::size_t n = 0; n + 1 <= N; ++n) CHECK(q[n] == Complex{2.0, 0.0});
  CHECK(q[N] == Complex{0.0, 0.0});
}

TEST_CASE("divide_by_z then shift-up round-trips") {
  std::mt19937_64 rng(16u);
  auto a = oracle::random_series(rng, 64, 1.0, true);
  ComplexSeries z(64);
  z[1] = Complex{1.0, 0.0};
  auto round = arcmax::multiply(z, arcmax::divide_by_z(a));
  for (std::size_t n = 0; n + 1 <= 64; ++n) CHECK(round[n] == a[n]);
}

TEST_CASE("divide_by_z rejects a pole at the origin") {
  ComplexSeries a(4);
  a[0] = Complex{1.0, 0.0};
  CHECK_THROWS_WITH_AS(arcmax::divide_by_z(a), "integrand has a pole at 0",
                       std::domain_error);
}

TEST_CASE("composition with z^2 interleaves coefficients") {
  const std::size_t N = 40;
  auto a = geometric(N);
  ComplexSeries w(N);
  w[2] = Complex{1.0, 0.0};
  auto c = arcmax::compose_with_schwarz(a, w);
  for (std::size_t n = 0; n <= N; ++n) {
    const double expect = (n % 2 == 0) ? 1.0 : 0.0;
    CHECK(std::abs(c[n] - Complex{expect, 0.0}) <= 1e-13);
  }
}

TEST_CASE("composition with a rotation scales coefficients by eps^n") {
  const std::size_t N = 32;
  std::mt19937_64 rng(17u);
  auto a = oracle::random_series(rng, N, 1.0, false);
  const Complex eps = std::polar(1.0, 0.8345);
  ComplexSeries w(N);
  w[1] = eps;
  auto c = arcmax::compose_with_schwarz(a, w);
  Complex en{1.0, 0.0};
  for (std::size_t n = 0; n <= N; ++n) {
    CHECK(std::abs(c[n] - a[n] * en) <= 1e-12 * (1.0 + std::abs(a[n])));
    en *= eps;
  }
}

TEST_CASE("composition requires an inner series vanishing at 0") {
  ComplexSeries a(4), w(4);
  w[0] = Complex{0.1, 0.0};
  CHECK_THROWS_AS(arcmax::compose_with_schwarz(a, w), std::invalid_argument);
}

TEST_CASE("eval_on_circle matches Horner evaluation on grid angles") {
  std::mt19937_64 rng(18u);
  auto a = oracle::random_series(rng, 96, 1.0, false);
  const double r = 0.8;
  auto s = arcmax::eval_on_circle(a, r, 1024);
  for (int probe = 0; probe < 16; ++probe) {
    const std::size_t j = rng() % s.grid();
    const double th = s.theta(j);
    const Complex direct = a.eval(std::polar(r, th));
    CHECK(std::abs(s.values[j] - direct) <= 1e-12 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("eval_on_circle reproduces the geometric series closed form") {
  const std::size_t N = 256;
  auto a = geometric(N);
  const double r = 0.5;
  auto s = arcmax::eval_on_circle(a, r, 1024);
  for (std::size_t j = 0; j < s.grid(); j += 37) {
    const Complex z = std::polar(r, s.theta(j));
    const Complex closed = 1.0 / (1.0 - z);
    // Tail of the truncated geometric series at r = 0.5 is ~ 2^-256.
    CHECK(std::abs(s.values[j] - closed) <= 1e-12);
  }
}

TEST_CASE("eval_on_circle is deterministic") {
  std::mt19937_64 rng(19u);
  auto a = oracle::random_series(rng, 64, 1.0, false);
  auto s1 = arcmax::eval_on_circle(a, 0.9, 512);
  auto s2 = arcmax::eval_on_circle(a, 0.9, 512);
  REQUIRE(s1.grid() == s2.grid());
  CHECK(std::memcmp(s1.values.data(), s2.values.data(),
                    s1.grid() * sizeof(Complex)) == 0);
}

TEST_CASE("eval_on_circle validates its inputs") {
  ComplexSeries a(10);
  CHECK_THROWS_AS(arcmax::eval_on_circle(a, 0.96, 64), std::invalid_argument);
  CHECK_THROWS_AS(arcmax::eval_on_circle(a, 0.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(arcmax::eval_on_circle(a, 0.5, 60), std::invalid_argument);
  CHECK_THROWS_AS(arcmax::eval_on_circle(a, 0.5, 16), std::invalid_argument);
  CHECK_NOTHROW(arcmax::eval_on_circle(a, 0.5, 32));
}

TEST_CASE("default grid honours the anti-aliasing floor") {
  CHECK(arcmax::default_grid(256) == 4096);
  CHECK(arcmax::default_grid(511) == 4096);
  CHECK(arcmax::default_grid(2047) == 4096);
  CHECK(arcmax::default_grid(2048) == 8192);
}

TEST_SUITE_END();
