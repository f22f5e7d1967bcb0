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

#ifndef ARCMAX_OMEGA_HPP
#define ARCMAX_OMEGA_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "arcmax/series.hpp"

namespace arcmax {

// Coefficients with |Im c_n| at or below this bound count as real, i.e. the
// domain is symmetric about the real axis.
inline constexpr double kSymTol = 1e-12;

// Starlikeness probe slack: the probe margin may dip this far below zero
// before the domain is rejected.
inline constexpr double kStarTol = 1e-9;

struct StarlikeResult {
  bool passed = false;
  double margin = 0.0;       // min over the probe circle of Re[z phi' / (phi - 1)]
  double worst_theta = 0.0;  // angle attaining the margin
};

// A convexity-range domain: the region Omega that 1 + z f''/f' must stay in.
// It is described by its Riemann map phi with phi(0) = 1, phi'(0) > 0.
// Catalog entries are half-planes {Re w > beta} and sectors of opening
// alpha*pi symmetric about the positive real axis; Custom carries a raw
// series and makes no geometric promises until the probes pass.
class OmegaDomain {
 public:
  enum class Kind { HalfPlane, Sector, Custom };

  // beta in [-1/2, 1).  The lower end is the widest half-plane the class
  // supports by convention; widening it is a deliberate config change.
  static OmegaDomain half_plane(double beta);
  // alpha in (0, 1]; alpha = 1 degenerates to the right half-plane.
  static OmegaDomain sector(double alpha);
  static OmegaDomain custom(ComplexSeries phi);

  Kind kind() const { return kind_; }
  double beta() const { return beta_; }
  double alpha() const { return alpha_; }

  // Taylor coefficients of phi to the requested order.  Catalog kinds are
  // generated; Custom pads with zeros past its stored coefficients.
  ComplexSeries phi_series(std::size_t order) const;

  // Starlike-about-1 probe on |z| = rho: min Re[z phi'(z)/(phi(z) - 1)].
  // Throws on numerical degeneracy (phi = 1 at a probe point).
  StarlikeResult check_starlike(double rho = kRMax, std::size_t grid = 2048) const;

  // Runs the probe and latches the result; extremal construction requires it.
  bool verify_starlike(double rho = kRMax, std::size_t grid = 2048);
  bool starlike_verified() const { return starlike_verified_; }

  // True when all Im c_n vanish within kSymTol (domain symmetric about R).
  bool check_symmetric(std::size_t order = 64) const;

  // Short handle used in reports, e.g. "half_plane(-0.50)".
  std::string label() const;

  friend void to_json(nlohmann::json& j, const OmegaDomain& d);
  static OmegaDomain from_json(const nlohmann::json& j);

 private:
  OmegaDomain() = default;

  Kind kind_ = Kind::HalfPlane;
  double beta_ = 0.0;
  double alpha_ = 1.0;
  ComplexSeries custom_phi_;
  bool starlike_verified_ = false;
};

}  // namespace arcmax

#endif  // ARCMAX_OMEGA_HPP
