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

#include "arcmax/members.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace arcmax {

namespace {

void require_unimodular(Complex u, const char* what) {
  if (std::abs(std::abs(u) - 1.0) > 1e-12) {
    throw std::invalid_argument(std::string(what) + " must be unimodular");
  }
}

// num / den truncated, den_0 = 1.
ComplexSeries divide_by_unit(const ComplexSeries& num, const ComplexSeries& den) {
  const std::size_t n = num.order();
  ComplexSeries q(n);
  for (std::size_t m = 0; m <= n; ++m) {
    Complex acc = num[m];
    for (std::size_t k = 1; k <= m; ++k) {
      acc -= den[k] * q[m - k];
    }
    q[m] = acc;
  }
  return q;
}

// log(1 + s) for s_0 = 0, via L' = s'/(1+s).
ComplexSeries log1p_series(const ComplexSeries& s) {
  const std::size_t n = s.order();
  ComplexSeries onePlus(n);
  onePlus[0] = Complex{1.0, 0.0};
  for (std::size_t m = 1; m <= n; ++m) onePlus[m] = s[m];
  return integrate(divide_by_unit(derivative(s), onePlus));
}

// h = phi(omega) through the closed form of the domain map; the generic
// truncated-Horner composition only remains for Custom domains.
ComplexSeries compose_phi(const OmegaDomain& domain, const ComplexSeries& w,
                          std::size_t order) {
  switch (domain.kind()) {
    case OmegaDomain::Kind::HalfPlane: {
      // (1 + (1-2b) w)/(1 - w).
      const double c = 1.0 - 2.0 * domain.beta();
      ComplexSeries num(order), den(order);
      num[0] = Complex{1.0, 0.0};
      den[0] = Complex{1.0, 0.0};
      for (std::size_t m = 1; m <= order; ++m) {
        num[m] = c * w[m];
        den[m] = -w[m];
      }
      return divide_by_unit(num, den);
    }
    case OmegaDomain::Kind::Sector: {
      // exp(alpha (log(1+w) - log(1-w))).
      ComplexSeries minus(order);
      for (std::size_t m = 1; m <= order; ++m) minus[m] = -w[m];
      const ComplexSeries lp = log1p_series(w);
      const ComplexSeries lm = log1p_series(minus);
      ComplexSeries g(order);
      for (std::size_t m = 1; m <= order; ++m) {
        g[m] = domain.alpha() * (lp[m] - lm[m]);
      }
      return exp_series(g);
    }
    case OmegaDomain::Kind::Custom:
      return compose_with_schwarz(domain.phi_series(order), w);
  }
  throw std::logic_error("unreachable domain kind");
}

MemberFunction from_profile(const OmegaDomain& domain, ComplexSeries h,
                            std::string id) {
  h[0] -= Complex{1.0, 0.0};
  auto log_fprime = integrate(divide_by_z(h));
  auto fprime = exp_series(log_fprime);
  auto f = integrate(fprime);
  return MemberFunction{domain, std::move(log_fprime), std::move(fprime),
                        std::move(f), std::move(id)};
}

}  // namespace

SchwarzSpec SchwarzSpec::identity() { return SchwarzSpec{}; }

SchwarzSpec SchwarzSpec::rotation(Complex eps) {
  require_unimodular(eps, "rotation factor");
  SchwarzSpec s;
  s.kind = Kind::Rotation;
  s.eps = eps;
  return s;
}

SchwarzSpec SchwarzSpec::monomial(Complex c, std::size_t k) {
  if (std::abs(c) > 1.0 + 1e-12) {
    throw std::invalid_argument("monomial coefficient must satisfy |c| <= 1");
  }
  if (k < 1 || k > kMaxMonomial) {
    throw std::invalid_argument("monomial exponent out of range");
  }
  SchwarzSpec s;
  s.kind = Kind::Monomial;
  s.c = c;
  s.k = k;
  return s;
}

SchwarzSpec SchwarzSpec::blaschke_z(std::vector<Complex> zeros, Complex eta) {
  require_unimodular(eta, "blaschke front factor");
  if (zeros.size() > kMaxZeros) {
    throw std::invalid_argument("too many blaschke zeros");
  }
  for (Complex a : zeros) {
    if (std::abs(a) > kMaxBlaschkeZero + 1e-12) {
      throw std::invalid_argument("blaschke zero outside |a| <= 0.8");
    }
  }
  SchwarzSpec s;
  s.kind = Kind::BlaschkeZ;
  s.zeros = std::move(zeros);
  s.eta = eta;
  return s;
}

ComplexSeries SchwarzSpec::series(std::size_t order) const {
  ComplexSeries w(order);
  switch (kind) {
    case Kind::Identity:
      if (order >= 1) w[1] = Complex{1.0, 0.0};
      return w;
    case Kind::Rotation:
      if (order >= 1) w[1] = eps;
      return w;
    case Kind::Monomial:
      if (order >= k) w[k] = c;
      return w;
    case Kind::BlaschkeZ: {
      if (order >= 1) w[1] = eta;
      for (Complex a : zeros) {
        // multiply by (z - a)/(1 - conj(a) z): one short polynomial, one
        // geometric factor folded in by a linear recurrence.
        ComplexSeries num(order);
        for (std::size_t m = order; m >= 1; --m) {
          num[m] = w[m - 1] - a * w[m];
        }
        num[0] = -a * w[0];
        const Complex ac = std::conj(a);
        ComplexSeries out(order);
        Complex carry{0.0, 0.0};
        for (std::size_t m = 0; m <= order; ++m) {
          carry = num[m] + ac * carry;  // out = num / (1 - conj(a) z)
          out[m] = carry;
        }
        w = out;
      }
      return w;
    }
  }
  throw std::logic_error("unreachable schwarz kind");
}

std::string SchwarzSpec::label() const {
  char buf[96];
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::Rotation:
      std::snprintf(buf, sizeof(buf), "rotation(%.6f)", std::arg(eps));
      return buf;
    case Kind::Monomial:
      std::snprintf(buf, sizeof(buf), "monomial(%.4f%+.4fi,%zu)", c.real(), c.imag(), k);
      return buf;
    case Kind::BlaschkeZ:
      std::snprintf(buf, sizeof(buf), "blaschke(%zu zeros,%.6f)", zeros.size(),
                    std::arg(eta));
      return buf;
  }
  return "unknown";
}

void to_json(nlohmann::json& j, const SchwarzSpec& s) {
  switch (s.kind) {
    case SchwarzSpec::Kind::Identity:
      j = nlohmann::json{{"kind", "identity"}};
      return;
    case SchwarzSpec::Kind::Rotation:
      j = nlohmann::json{{"kind", "rotation"}, {"eps", {s.eps.real(), s.eps.imag()}}};
      return;
    case SchwarzSpec::Kind::Monomial:
      j = nlohmann::json{
          {"kind", "monomial"}, {"c", {s.c.real(), s.c.imag()}}, {"k", s.k}};
      return;
    case SchwarzSpec::Kind::BlaschkeZ: {
      nlohmann::json zs = nlohmann::json::array();
      for (Complex a : s.zeros) zs.push_back({a.real(), a.imag()});
      j = nlohmann::json{{"kind", "blaschke_z"},
                         {"zeros", std::move(zs)},
                         {"eta", {s.eta.real(), s.eta.imag()}}};
      return;
    }
  }
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex uniform_unit(std::mt19937_64& rng) {
  const double theta = -3.14159265358979323846 + 2.0 * 3.14159265358979323846 * uniform01(rng);
  return std::polar(1.0, theta);
}

Complex uniform_disk(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(uniform01(rng));
  const double theta = -3.14159265358979323846 + 2.0 * 3.14159265358979323846 * uniform01(rng);
  return std::polar(r, theta);
}

SchwarzSpec random_schwarz_spec(std::mt19937_64& rng) {
  const double pick = uniform01(rng);
  if (pick < 1.0 / 3.0) {
    const Complex c = uniform_disk(rng, 1.0);
    const std::size_t k =
        1 + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(SchwarzSpec::kMaxMonomial));
    return SchwarzSpec::monomial(c, std::min(k, SchwarzSpec::kMaxMonomial));
  }
  const std::size_t count = static_cast<std::size_t>(uniform01(rng) * 4.0);
  std::vector<Complex> zeros;
  for (std::size_t i = 0; i < std::min<std::size_t>(count, SchwarzSpec::kMaxZeros); ++i) {
    zeros.push_back(uniform_disk(rng, SchwarzSpec::kMaxBlaschkeZero));
  }
  return SchwarzSpec::blaschke_z(std::move(zeros), uniform_unit(rng));
}

MemberFunction extremal(const OmegaDomain& domain, std::size_t order) {
  if (!domain.starlike_verified()) {
    throw std::invalid_argument(
        "extremal construction requires a domain with a passed starlikeness probe");
  }
  return from_profile(domain, domain.phi_series(order), "extremal");
}

MemberFunction random_member(const OmegaDomain& domain, const SchwarzSpec& spec,
                             std::size_t order, std::string id) {
  if (id.empty()) id = spec.label();
  ComplexSeries h(order);
  switch (spec.kind) {
    case SchwarzSpec::Kind::Identity:
      h = domain.phi_series(order);
      break;
    case SchwarzSpec::Kind::Rotation: {
      h = domain.phi_series(order);
      Complex en{1.0, 0.0};
      for (std::size_t n = 0; n <= order; ++n) {
        h[n] *= en;
        en *= spec.eps;
      }
      break;
    }
    case SchwarzSpec::Kind::Monomial: {
      // phi(c z^k): coefficient phi_n c^n lands on z^{n k}.
      const ComplexSeries phi = domain.phi_series(order);
      Complex cn{1.0, 0.0};
      for (std::size_t n = 0; n * spec.k <= order; ++n) {
        h[n * spec.k] = phi[n] * cn;
        cn *= spec.c;
      }
      break;
    }
    case SchwarzSpec::Kind::BlaschkeZ:
      h = compose_phi(domain, spec.series(order), order);
      break;
  }
  return from_profile(domain, std::move(h), std::move(id));
}

MemberFunction rotate(const MemberFunction& m, Complex eps) {
  require_unimodular(eps, "rotation factor");
  const std::size_t order = m.f.order();
  MemberFunction out{m.domain, ComplexSeries(order), ComplexSeries(order),
                     ComplexSeries(order), m.id + "+rot"};
  Complex en{1.0, 0.0};  // eps^n
  for (std::size_t n = 0; n <= order; ++n) {
    out.log_fprime[n] = m.log_fprime[n] * en;
    out.fprime[n] = m.fprime[n] * en;
    out.f[n] = n == 0 ? Complex{0.0, 0.0} : m.f[n] * en / eps;
    en *= eps;
  }
  return out;
}

ComplexSeries convexity_profile(const MemberFunction& m) {
  const std::size_t order = m.log_fprime.order();
  ComplexSeries h(order);
  h[0] = Complex{1.0, 0.0};
  for (std::size_t n = 1; n <= order; ++n) {
    h[n] = static_cast<double>(n) * m.log_fprime[n];
  }
  return h;
}

}  // namespace arcmax
