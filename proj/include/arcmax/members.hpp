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

#ifndef ARCMAX_MEMBERS_HPP
#define ARCMAX_MEMBERS_HPP

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "arcmax/omega.hpp"
#include "arcmax/series.hpp"

namespace arcmax {

// Description of a Schwarz function omega (omega(0) = 0, |omega| <= |z|)
// used to steer 1 + z f''/f' through the domain: the identity, a rotation
// eps z, a monomial c z^k, or z times a finite Blaschke product.
struct SchwarzSpec {
  enum class Kind { Identity, Rotation, Monomial, BlaschkeZ };

  Kind kind = Kind::Identity;
  Complex eps{1.0, 0.0};          // Rotation: |eps| = 1
  Complex c{0.0, 0.0};            // Monomial: |c| <= 1
  std::size_t k = 1;              // Monomial exponent, 1 <= k <= kMaxMonomial
  std::vector<Complex> zeros;     // BlaschkeZ: |a_i| <= kMaxBlaschkeZero
  Complex eta{1.0, 0.0};          // BlaschkeZ: unimodular front factor

  static constexpr std::size_t kMaxMonomial = 8;
  static constexpr double kMaxBlaschkeZero = 0.8;
  static constexpr std::size_t kMaxZeros = 3;

  static SchwarzSpec identity();
  static SchwarzSpec rotation(Complex eps);
  static SchwarzSpec monomial(Complex c, std::size_t k);
  static SchwarzSpec blaschke_z(std::vector<Complex> zeros, Complex eta);

  // Truncated Taylor coefficients of omega.
  ComplexSeries series(std::size_t order) const;

  std::string label() const;
  friend void to_json(nlohmann::json& j, const SchwarzSpec& s);
};

// Draws a spec from the sampling mix used by the sweep: monomials with
// uniform-in-disk coefficient and exponent up to 8, or z times a Blaschke
// product with 0..3 zeros uniform in |a| <= 0.8 and unimodular front factor.
// Zero-count 0 degenerates to a pure rotation, the equality case.
SchwarzSpec random_schwarz_spec(std::mt19937_64& rng);

// A class member f, normalized f(0) = 0, f'(0) = 1, carried as the triple
// log f', f' = exp(log f'), f = integral of f'.  All three share one order.
struct MemberFunction {
  OmegaDomain domain;
  ComplexSeries log_fprime;  // constant term 0
  ComplexSeries fprime;      // constant term 1
  ComplexSeries f;           // f_0 = 0, f_1 = 1
  std::string id;            // report handle, e.g. "extremal" or "m0042"
};

// The distinguished member driven by omega = z: log k' = int (phi - 1)/z.
// Requires the domain's starlikeness probe to have been run and latched.
MemberFunction extremal(const OmegaDomain& domain, std::size_t order);

// Member generated by h = phi(omega(z)).  Uses closed forms of the catalog
// maps for speed; Custom domains go through the generic composition.
MemberFunction random_member(const OmegaDomain& domain, const SchwarzSpec& spec,
                             std::size_t order, std::string id = {});

// The rotation conjugate g(z) = conj(eps) f(eps z); |eps| = 1.
MemberFunction rotate(const MemberFunction& m, Complex eps);

// 1 + z (log f')' as a series; equals phi(omega(z)) for generated members.
ComplexSeries convexity_profile(const MemberFunction& m);

// Uniform helpers driven by explicit PRNG state, shared by sweep and tests.
double uniform01(std::mt19937_64& rng);
Complex uniform_unit(std::mt19937_64& rng);           // |z| = 1
Complex uniform_disk(std::mt19937_64& rng, double radius);

}  // namespace arcmax

#endif  // ARCMAX_MEMBERS_HPP
