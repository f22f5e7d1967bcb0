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

#include "arcmax/series.hpp"

#include <cmath>
#include <stdexcept>

namespace arcmax {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_same_order(const ComplexSeries& a, const ComplexSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series orders differ");
  }
}
}  // namespace

std::size_t default_grid(std::size_t order) {
  std::size_t need = 2 * (order + 1);
  std::size_t m = 4096;
  while (m < need) m *= 2;
  return m;
}

ComplexSeries::ComplexSeries(std::vector<Complex> coeff) : coeff_(std::move(coeff)) {
  if (coeff_.empty()) {
    throw std::invalid_argument("series needs at least the constant coefficient");
  }
  for (const Complex& c : coeff_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("series coefficients must be finite");
    }
  }
}

Complex ComplexSeries::eval(Complex z) const {
  Complex acc = coeff_.back();
  for (std::size_t n = coeff_.size() - 1; n-- > 0;) {
    acc = acc * z + coeff_[n];
  }
  return acc;
}

double ComplexSeries::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeff_) m = std::max(m, std::abs(c));
  return m;
}

double CircleSamples::theta(std::size_t j) const {
  return -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid());
}

ComplexSeries multiply(const ComplexSeries& a, const ComplexSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  ComplexSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == Complex{0.0, 0.0}) continue;
    const Complex ai = a[i];
    for (std::size_t j = 0; i + j <= n; ++j) {
      out[i + j] += ai * b[j];
    }
  }
  return out;
}

ComplexSeries exp_series(const ComplexSeries& a) {
  if (a[0] != Complex{0.0, 0.0}) {
    throw std::invalid_argument("exp_series requires a_0 = 0");
  }
  const std::size_t n = a.order();
  ComplexSeries e(n);
  e[0] = Complex{1.0, 0.0};
  // n e_n = sum_{k=1}^{n} k a_k e_{n-k}, the coefficient form of e' = a' e.
  for (std::size_t m = 1; m <= n; ++m) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 1; k <= m; ++k) {
      acc += static_cast<double>(k) * a[k] * e[m - k];
    }
    e[m] = acc / static_cast<double>(m);
  }
  return e;
}

ComplexSeries integrate(const ComplexSeries& a) {
  const std::size_t n = a.order();
  ComplexSeries out(n);
  for (std::size_t m = 1; m <= n; ++m) {
    out[m] = a[m - 1] / static_cast<double>(m);
  }
  return out;
}

ComplexSeries derivative(const ComplexSeries& a) {
  const std::size_t n = a.order();
  ComplexSeries out(n);
  for (std::size_t m = 0; m + 1 <= n; ++m) {
    out[m] = static_cast<double>(m + 1) * a[m + 1];
  }
  return out;
}

ComplexSeries divide_by_z(const ComplexSeries& a) {
  if (std::abs(a[0]) > kPoleTol) {
    throw std::domain_error("integrand has a pole at 0");
  }
  const std::size_t n = a.order();
  ComplexSeries out(n);
  for (std::size_t m = 0; m + 1 <= n; ++m) {
    out[m] = a[m + 1];
  }
  return out;
}

ComplexSeries compose_with_schwarz(const ComplexSeries& a, const ComplexSeries& w) {
  require_same_order(a, w);
  if (w[0] != Complex{0.0, 0.0}) {
    throw std::invalid_argument("inner series must vanish at 0");
  }
  const std::size_t n = a.order();
  ComplexSeries acc(n);
  acc[0] = a[n];
  for (std::size_t m = n; m-- > 0;) {
    acc = multiply(acc, w);
    acc[0] += a[m];
  }
  return acc;
}

namespace detail {

bool is_pow2(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

void fft_forward(std::vector<Complex>& x) {
  const std::size_t n = x.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft size must be a power of two");
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len);
    const Complex wlen{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      Complex w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        Complex u = x[i + k];
        Complex v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace detail

CircleSamples eval_on_circle(const ComplexSeries& a, double r, std::size_t M) {
  if (!(r > 0.0) || r > kRMax) {
    throw std::invalid_argument("circle radius must satisfy 0 < r <= r_max");
  }
  if (!detail::is_pow2(M) || M < kMinGrid) {
    throw std::invalid_argument("grid size must be a power of two and >= 4");
  }
  if (M < 2 * (a.order() + 1)) {
    throw std::invalid_argument("grid too coarse for series order (aliasing)");
  }
  // theta_j = -pi + 2 pi j / M, so e^{i n theta_j} = (-1)^n e^{2 pi i n j / M}:
  // load c_n r^n with alternating sign and run one forward transform.
  std::vector<Complex> buf(M, Complex{0.0, 0.0});
  double rn = 1.0;
  double sign = 1.0;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    buf[n] = a[n] * (sign * rn);
    rn *= r;
    sign = -sign;
  }
  detail::fft_forward(buf);
  CircleSamples out;
  out.radius = r;
  out.values = std::move(buf);
  return out;
}

}  // namespace arcmax
