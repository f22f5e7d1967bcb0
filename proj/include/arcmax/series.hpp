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

#ifndef ARCMAX_SERIES_HPP
#define ARCMAX_SERIES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace arcmax {

using Complex = std::complex<double>;

// Evaluation radius guard: all circle evaluations require r <= kRMax, which
// keeps truncation tails of the catalog maps negligible at default order.
inline constexpr double kRMax = 0.95;

// Default truncation order for power series (N + 1 stored coefficients).
inline constexpr std::size_t kDefaultOrder = 256;

// |a_0| above this bound disqualifies a series from division by z.
inline constexpr double kPoleTol = 1e-12;

// Smallest circle grid, and the default used by the verification harness.
inline constexpr std::size_t kMinGrid = 4;
std::size_t default_grid(std::size_t order);  // max(4096, 2(N+1)) -> pow2

// Truncated power series sum_{n=0}^{N} c_n z^n with fixed order N.
// Coefficients are finite complex doubles; arithmetic never reallocates
// beyond order N, so truncation is explicit at every step.
class ComplexSeries {
 public:
  ComplexSeries() : coeff_(1, Complex{0.0, 0.0}) {}
  explicit ComplexSeries(std::size_t order) : coeff_(order + 1, Complex{0.0, 0.0}) {}
  explicit ComplexSeries(std::vector<Complex> coeff);

  std::size_t order() const { return coeff_.size() - 1; }
  std::size_t size() const { return coeff_.size(); }

  Complex& operator[](std::size_t n) { return coeff_[n]; }
  const Complex& operator[](std::size_t n) const { return coeff_[n]; }

  const std::vector<Complex>& coefficients() const { return coeff_; }

  // Horner evaluation at a point of the open disk; used as the reference
  // for grid evaluation and for off-grid probes.
  Complex eval(Complex z) const;

  // Largest |c_n|; convenient for scale-aware comparisons in tests.
  double max_abs() const;

 private:
  std::vector<Complex> coeff_;
};

// Samples of a series on the circle |z| = r: values[j] = sum c_n r^n e^{i n theta_j}
// with theta_j = -pi + 2 pi j / M.  M is a power of two so evaluation can ride
// an FFT and later spectral manipulation stays cheap.
struct CircleSamples {
  double radius = 0.0;
  std::vector<Complex> values;

  std::size_t grid() const { return values.size(); }
  double theta(std::size_t j) const;
};

// Cauchy product truncated to the common order.  Orders must match.
ComplexSeries multiply(const ComplexSeries& a, const ComplexSeries& b);

// exp(a) for a series with a_0 = 0, via the e' = a' e recurrence.
ComplexSeries exp_series(const ComplexSeries& a);

// Term-by-term antiderivative with constant 0; the top input coefficient
// falls off the end of the truncated result.
ComplexSeries integrate(const ComplexSeries& a);

// Term-by-term derivative; the result's top coefficient is zero.
ComplexSeries derivative(const ComplexSeries& a);

// (a - a_0)/z for a with |a_0| <= kPoleTol; coefficients shift down one slot
// and the top slot of the result is zero.
ComplexSeries divide_by_z(const ComplexSeries& a);

// a(w(z)) truncated, for a Schwarz-type inner series with w_0 = 0.
// Horner over truncated series: N + 1 truncated multiplies.
ComplexSeries compose_with_schwarz(const ComplexSeries& a, const ComplexSeries& w);

// Grid evaluation on |z| = r.  Requires 0 < r <= kRMax, M a power of two,
// M >= kMinGrid and M >= 2 (N + 1) so the polynomial cannot alias.
// Deterministic: same inputs give bit-identical output.
CircleSamples eval_on_circle(const ComplexSeries& a, double r, std::size_t M);

namespace detail {
// In-place radix-2 DIT transform computing X[j] = sum_n x[n] e^{+2 pi i n j / M}.
// M must be a power of two.
void fft_forward(std::vector<Complex>& x);
bool is_pow2(std::size_t m);
}  // namespace detail

}  // namespace arcmax

#endif  // ARCMAX_SERIES_HPP
