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

#include "arcmax/omega.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace arcmax {

OmegaDomain OmegaDomain::half_plane(double beta) {
  if (!(beta >= -0.5) || !(beta < 1.0)) {
    throw std::invalid_argument("half-plane level must satisfy -1/2 <= beta < 1");
  }
  OmegaDomain d;
  d.kind_ = Kind::HalfPlane;
  d.beta_ = beta;
  return d;
}

OmegaDomain OmegaDomain::sector(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) {
    throw std::invalid_argument("sector opening must satisfy 0 < alpha <= 1");
  }
  OmegaDomain d;
  d.kind_ = Kind::Sector;
  d.alpha_ = alpha;
  return d;
}

OmegaDomain OmegaDomain::custom(ComplexSeries phi) {
  OmegaDomain d;
  d.kind_ = Kind::Custom;
  d.custom_phi_ = std::move(phi);
  return d;
}

ComplexSeries OmegaDomain::phi_series(std::size_t order) const {
  switch (kind_) {
    case Kind::HalfPlane: {
      // (1 + (1-2b) z)/(1 - z) = 1 + (2 - 2b) (z + z^2 + ...).
      ComplexSeries phi(order);
      phi[0] = Complex{1.0, 0.0};
      for (std::size_t n = 1; n <= order; ++n) {
        phi[n] = Complex{2.0 - 2.0 * beta_, 0.0};
      }
      return phi;
    }
    case Kind::Sector: {
      // ((1+z)/(1-z))^alpha = exp(2 alpha atanh z), principal branch.
      ComplexSeries lg(order);
      for (std::size_t n = 1; n <= order; n += 2) {
        lg[n] = Complex{2.0 * alpha_ / static_cast<double>(n), 0.0};
      }
      return exp_series(lg);
    }
    case Kind::Custom: {
      ComplexSeries phi(order);
      const std::size_t upto = std::min(order, custom_phi_.order());
      for (std::size_t n = 0; n <= upto; ++n) phi[n] = custom_phi_[n];
      return phi;
    }
  }
  throw std::logic_error("unreachable domain kind");
}

StarlikeResult OmegaDomain::check_starlike(double rho, std::size_t grid) const {
  const std::size_t order =
      kind_ == Kind::Custom ? custom_phi_.order() : kDefaultOrder;
  const ComplexSeries phi = phi_series(order);
  const ComplexSeries dphi = derivative(phi);
  const CircleSamples sphi = eval_on_circle(phi, rho, grid);
  const CircleSamples sdphi = eval_on_circle(dphi, rho, grid);

  StarlikeResult res;
  res.margin = 1e300;
  for (std::size_t j = 0; j < grid; ++j) {
    const Complex denom = sphi.values[j] - Complex{1.0, 0.0};
    if (std::abs(denom) <= 1e-14 * (1.0 + std::abs(sphi.values[j]))) {
      throw std::runtime_error("starlikeness probe degenerate: phi = 1 on the probe circle");
    }
    const Complex z = std::polar(rho, sphi.theta(j));
    const double q = (z * sdphi.values[j] / denom).real();
    if (q < res.margin) {
      res.margin = q;
      res.worst_theta = sphi.theta(j);
    }
  }
  res.passed = res.margin >= -kStarTol;
  return res;
}

bool OmegaDomain::verify_starlike(double rho, std::size_t grid) {
  const StarlikeResult res = check_starlike(rho, grid);
  if (res.passed) starlike_verified_ = true;
  return res.passed;
}

bool OmegaDomain::check_symmetric(std::size_t order) const {
  const ComplexSeries phi = phi_series(order);
  for (std::size_t n = 0; n <= phi.order(); ++n) {
    if (std::abs(phi[n].imag()) > kSymTol) return false;
  }
  return true;
}

std::string OmegaDomain::label() const {
  char buf[64];
  switch (kind_) {
    case Kind::HalfPlane:
      std::snprintf(buf, sizeof(buf), "half_plane(%.2f)", beta_);
      return buf;
    case Kind::Sector:
      std::snprintf(buf, sizeof(buf), "sector(%.2f)", alpha_);
      return buf;
    case Kind::Custom:
      return "custom";
  }
  return "unknown";
}

void to_json(nlohmann::json& j, const OmegaDomain& d) {
  switch (d.kind_) {
    case OmegaDomain::Kind::HalfPlane:
      j = nlohmann::json{{"kind", "half_plane"}, {"beta", d.beta_}};
      return;
    case OmegaDomain::Kind::Sector:
      j = nlohmann::json{{"kind", "sector"}, {"alpha", d.alpha_}};
      return;
    case OmegaDomain::Kind::Custom: {
      nlohmann::json coeffs = nlohmann::json::array();
      for (std::size_t n = 0; n <= d.custom_phi_.order(); ++n) {
        coeffs.push_back({d.custom_phi_[n].real(), d.custom_phi_[n].imag()});
      }
      j = nlohmann::json{{"kind", "custom"}, {"coeffs", std::move(coeffs)}};
      return;
    }
  }
}

OmegaDomain OmegaDomain::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "half_plane") return half_plane(j.at("beta").get<double>());
  if (kind == "sector") return sector(j.at("alpha").get<double>());
  if (kind == "custom") {
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.empty()) {
      throw std::invalid_argument("custom domain needs a nonempty coefficient array");
    }
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) {
      c.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return custom(ComplexSeries(std::move(c)));
  }
  throw std::invalid_argument("unknown domain kind: " + kind);
}

}  // namespace arcmax
