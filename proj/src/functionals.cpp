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

#include "arcmax/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace arcmax {
namespace {

constexpr double kPi = AnalyticCircle::kPi;

// Monomial coefficients of the quintic Hermite interpolant on [0, 1] from
// values y, scaled first derivatives d = h g', scaled seconds c = h^2 g''.
struct Quintic {
  double a[6];
  Quintic(double y0, double d0, double c0, double y1, double d1, double c1) {
    a[0] = y0;
    a[1] = d0;
    a[2] = 0.5 * c0;
    a[3] = -10.0 * y0 - 6.0 * d0 - 1.5 * c0 + 10.0 * y1 - 4.0 * d1 + 0.5 * c1;
    a[4] = 15.0 * y0 + 8.0 * d0 + 1.5 * c0 - 15.0 * y1 + 7.0 * d1 - c1;
    a[5] = -6.0 * y0 - 3.0 * d0 - 0.5 * c0 + 6.0 * y1 - 3.0 * d1 + 0.5 * c1;
  }
  double value(double s) const {
    double v = a[5];
    for (int k = 4; k >= 0; --k) v = v * s + a[k];
    return v;
  }
  double deriv(double s) const {
    double v = 5.0 * a[5];
    for (int k = 4; k >= 1; --k) v = v * s + double(k) * a[k];
    return v;
  }
  double integral(double s0, double s1) const {
    double v = 0.0;
    double p0 = s0, p1 = s1;
    for (int k = 0; k <= 5; ++k) {
      v += a[k] * (p1 - p0) / double(k + 1);
      p0 *= s0;
      p1 *= s1;
    }
    return v;
  }
};

void require_radius(double r) {
  if (!(r > 0.0) || r > kRMax) {
    throw std::domain_error("radius must lie in (0, 0.95]");
  }
}

double trapezoid_sum(const std::vector<double>& vals) {
  double s = 0.0;
  for (double v : vals) s += v;
  return s * (2.0 * kPi / double(vals.size()));
}

// Intersection of two sorted disjoint interval lists.
std::vector<std::pair<double, double>> intersect_intervals(
    const std::vector<std::pair<double, double>>& a,
    const std::vector<std::pair<double, double>>& b) {
  std::vector<std::pair<double, double>> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double lo = std::max(a[i].first, b[j].first);
    double hi = std::min(a[i].second, b[j].second);
    if (lo < hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

// Root of the cell model minus level inside [0, 1], bisection-safeguarded
// Newton.  Requires a sign change (or a zero endpoint) across the cell.
double solve_cell(const Quintic& q, double level, double f0, double f1) {
  if (f0 == 0.0) return 0.0;
  if (f1 == 0.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  double s = f0 / (f0 - f1);  // secant start
  for (int it = 0; it < 80; ++it) {
    double fs = q.value(s) - level;
    if (fs == 0.0) return s;
    if ((fs < 0.0) == (f0 < 0.0)) {
      lo = s;
    } else {
      hi = s;
    }
    double ds = q.deriv(s);
    double next = ds != 0.0 ? s - fs / ds : 0.5 * (lo + hi);
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - s) < 1e-16) return next;
    s = next;
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- gauges --

ConvexGauge ConvexGauge::exp_gauge() {
  ConvexGauge g;
  g.kind_ = Kind::Exp;
  return g;
}

ConvexGauge ConvexGauge::hinge(double t0) {
  if (!std::isfinite(t0)) throw std::invalid_argument("hinge threshold must be finite");
  ConvexGauge g;
  g.kind_ = Kind::Hinge;
  g.t0_ = t0;
  return g;
}

ConvexGauge ConvexGauge::square() {
  ConvexGauge g;
  g.kind_ = Kind::Square;
  return g;
}

ConvexGauge ConvexGauge::linear(double slope, double intercept) {
  if (!std::isfinite(slope) || !std::isfinite(intercept)) {
    throw std::invalid_argument("linear gauge parameters must be finite");
  }
  ConvexGauge g;
  g.kind_ = Kind::Linear;
  g.a_ = slope;
  g.b_ = intercept;
  return g;
}

ConvexGauge ConvexGauge::piecewise_linear(std::vector<double> knots,
                                          std::vector<double> values) {
  if (knots.size() < 2 || knots.size() != values.size()) {
    throw std::invalid_argument(
        "piecewise-linear gauge needs matching knots/values, at least two");
  }
  std::vector<double> slopes(knots.size() - 1);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i] < knots[i + 1])) {
      throw std::invalid_argument("piecewise-linear knots must be strictly increasing");
    }
    slopes[i] = (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
    if (i > 0 && slopes[i] < slopes[i - 1] - 1e-14) {
      throw std::invalid_argument("piecewise-linear gauge is not convex");
    }
  }
  ConvexGauge g;
  g.kind_ = Kind::PiecewiseLinear;
  g.knots_ = std::move(knots);
  g.values_ = std::move(values);
  g.slopes_ = std::move(slopes);
  return g;
}

bool ConvexGauge::nondecreasing() const {
  switch (kind_) {
    case Kind::Exp:
    case Kind::Hinge:
      return true;
    case Kind::Square:
      return false;
    case Kind::Linear:
      return a_ >= 0.0;
    case Kind::PiecewiseLinear:
      return slopes_.front() >= 0.0;
  }
  return false;
}

double ConvexGauge::operator()(double t) const {
  switch (kind_) {
    case Kind::Exp:
      return std::exp(t);
    case Kind::Hinge:
      return t > t0_ ? t - t0_ : 0.0;
    case Kind::Square:
      return t * t;
    case Kind::Linear:
      return a_ * t + b_;
    case Kind::PiecewiseLinear: {
      if (t <= knots_.front()) {
        return values_.front() + slopes_.front() * (t - knots_.front());
      }
      auto ub = std::size_t(std::upper_bound(knots_.begin(), knots_.end(), t) -
                            knots_.begin());
      std::size_t i = std::min(ub - 1, slopes_.size() - 1);
      return values_[i] + slopes_[i] * (t - knots_[i]);
    }
  }
  return 0.0;
}

double ConvexGauge::d1(double t) const {
  switch (kind_) {
    case Kind::Exp:
      return std::exp(t);
    case Kind::Hinge:
      return t >= t0_ ? 1.0 : 0.0;
    case Kind::Square:
      return 2.0 * t;
    case Kind::Linear:
      return a_;
    case Kind::PiecewiseLinear: {
      if (t < knots_.front()) return slopes_.front();
      auto ub = std::size_t(std::upper_bound(knots_.begin(), knots_.end(), t) -
                            knots_.begin());
      return slopes_[std::min(ub == 0 ? 0 : ub - 1, slopes_.size() - 1)];
    }
  }
  return 0.0;
}

double ConvexGauge::d2(double t) const {
  switch (kind_) {
    case Kind::Exp:
      return std::exp(t);
    case Kind::Square:
      return 2.0;
    default:
      return 0.0;
  }
}

double ConvexGauge::d3(double t) const {
  return kind_ == Kind::Exp ? std::exp(t) : 0.0;
}

std::string ConvexGauge::label() const {
  char buf[64];
  switch (kind_) {
    case Kind::Exp:
      return "exp";
    case Kind::Hinge:
      std::snprintf(buf, sizeof buf, "hinge(%.6g)", t0_);
      return buf;
    case Kind::Square:
      return "square";
    case Kind::Linear:
      std::snprintf(buf, sizeof buf, "linear(%.6g,%.6g)", a_, b_);
      return buf;
    case Kind::PiecewiseLinear:
      std::snprintf(buf, sizeof buf, "pwl(%zu)", knots_.size());
      return buf;
  }
  return "?";
}

SubharmonicGauge SubharmonicGauge::arc_length(double r) {
  require_radius(r);
  SubharmonicGauge g;
  g.kind_ = Kind::ArcLength;
  g.r_ = r;
  return g;
}

SubharmonicGauge SubharmonicGauge::log_abs() {
  SubharmonicGauge g;
  g.kind_ = Kind::LogAbs;
  return g;
}

SubharmonicGauge SubharmonicGauge::pow_abs(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("pow_abs exponent must be positive");
  SubharmonicGauge g;
  g.kind_ = Kind::PowAbs;
  g.p_ = p;
  return g;
}

SubharmonicGauge SubharmonicGauge::convex_of_re(ConvexGauge phi, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  SubharmonicGauge g;
  g.kind_ = Kind::ConvexOfRe;
  g.phi_ = std::move(phi);
  g.sign_ = sign;
  return g;
}

SubharmonicGauge SubharmonicGauge::convex_of_im(ConvexGauge phi, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  SubharmonicGauge g;
  g.kind_ = Kind::ConvexOfIm;
  g.phi_ = std::move(phi);
  g.sign_ = sign;
  return g;
}

double SubharmonicGauge::operator()(Complex w) const {
  switch (kind_) {
    case Kind::ArcLength:
      return r_ * std::exp(w.real());
    case Kind::LogAbs: {
      double m = std::abs(w);
      return m > 0.0 ? std::max(std::log(m), kLogClamp) : kLogClamp;
    }
    case Kind::PowAbs:
      return std::pow(std::abs(w), p_);
    case Kind::ConvexOfRe:
      return phi_(double(sign_) * w.real());
    case Kind::ConvexOfIm:
      return phi_(double(sign_) * w.imag());
  }
  return 0.0;
}

std::string SubharmonicGauge::label() const {
  char buf[96];
  switch (kind_) {
    case Kind::ArcLength:
      std::snprintf(buf, sizeof buf, "arclen(r=%.2f)", r_);
      return buf;
    case Kind::LogAbs:
      return "log_abs";
    case Kind::PowAbs:
      std::snprintf(buf, sizeof buf, "pow_abs(%.6g)", p_);
      return buf;
    case Kind::ConvexOfRe:
      std::snprintf(buf, sizeof buf, "%s(%cRe)", phi_.label().c_str(),
                    sign_ > 0 ? '+' : '-');
      return buf;
    case Kind::ConvexOfIm:
      std::snprintf(buf, sizeof buf, "%s(%cIm)", phi_.label().c_str(),
                    sign_ > 0 ? '+' : '-');
      return buf;
  }
  return "?";
}

// --------------------------------------------------------------- arc sets --

ArcSet ArcSet::full_circle() {
  ArcSet e;
  e.arcs_ = {{-kPi, kPi}};
  return e;
}

ArcSet ArcSet::from_arcs(std::vector<std::pair<double, double>> arcs) {
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [a, b] = arcs[i];
    if (!(a >= -kPi - 1e-12) || !(b <= kPi + 1e-12) || !(a <= b)) {
      throw std::invalid_argument("arc endpoints must satisfy -pi <= a <= b <= pi");
    }
    if (i > 0 && arcs[i - 1].second > a + 1e-15) {
      throw std::invalid_argument("arcs must be pairwise disjoint");
    }
  }
  ArcSet e;
  e.arcs_ = std::move(arcs);
  return e;
}

double ArcSet::measure() const {
  double m = 0.0;
  for (auto [a, b] : arcs_) m += b - a;
  return m;
}

std::string ArcSet::label() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "arcs(%zu,|E|=%.4f)", arcs_.size(), measure());
  return buf;
}

// --------------------------------------------------------- circle samples --

AnalyticCircle::AnalyticCircle(const ComplexSeries& a, double r, std::size_t grid) {
  r_ = r;
  if (grid == 0) grid = default_grid(a.order());
  const std::size_t n = a.order();
  ComplexSeries b(n);
  for (int k = 0; k <= 3; ++k) {
    for (std::size_t m = 0; m <= n; ++m) {
      Complex c = a[m];
      for (int t = 0; t < k; ++t) c *= Complex{0.0, double(m)};
      b[m] = c;
    }
    auto samples = eval_on_circle(b, r, grid);
    switch (k) {
      case 0: w_ = std::move(samples.values); break;
      case 1: dw_ = std::move(samples.values); break;
      case 2: d2w_ = std::move(samples.values); break;
      default: d3w_ = std::move(samples.values); break;
    }
  }
  cell_ = 2.0 * kPi / double(w_.size());
}

// ---------------------------------------------------------------- profile --

Profile::Profile(const AnalyticCircle& circle, Part part, double sign) {
  const std::size_t m = circle.grid();
  cell_ = circle.cell();
  u_.resize(m);
  u1_.resize(m);
  u2_.resize(m);
  u3_.resize(m);
  auto pick = [&](Complex v) {
    return sign * (part == Part::Re ? v.real() : v.imag());
  };
  for (std::size_t j = 0; j < m; ++j) {
    u_[j] = pick(circle.w()[j]);
    u1_[j] = pick(circle.dw()[j]);
    u2_[j] = pick(circle.d2w()[j]);
    u3_[j] = pick(circle.d3w()[j]);
  }
  auto [lo, hi] = std::minmax_element(u_.begin(), u_.end());
  min_ = *lo;
  max_ = *hi;
}

namespace {

Quintic cell_model(const Profile& p, std::size_t j) {
  const std::size_t m = p.grid();
  const double h = p.cell();
  const std::size_t k = (j + 1) % m;
  return Quintic(p.u()[j], h * p.u1()[j], h * h * p.u2()[j], p.u()[k],
                 h * p.u1()[k], h * h * p.u2()[k]);
}

}  // namespace

double Profile::value(double theta) const {
  const std::size_t m = u_.size();
  double x = (theta + kPi) / cell_;
  double jf = std::floor(x);
  std::size_t j = std::min<std::size_t>(m - 1, std::size_t(std::max(0.0, jf)));
  return cell_model(*this, j).value(x - double(j));
}

double Profile::deriv(double theta) const {
  const std::size_t m = u_.size();
  double x = (theta + kPi) / cell_;
  double jf = std::floor(x);
  std::size_t j = std::min<std::size_t>(m - 1, std::size_t(std::max(0.0, jf)));
  return cell_model(*this, j).deriv(x - double(j)) / cell_;
}

double Profile::quantile(double q) const {
  if (sorted_.empty()) {
    sorted_ = u_;
    std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
  }
  double idx = std::floor(q * double(sorted_.size()));
  std::size_t i = std::min<std::size_t>(sorted_.size() - 1,
                                        std::size_t(std::max(0.0, idx)));
  return sorted_[i];
}

std::vector<double> Profile::crossings(double level) const {
  const std::size_t m = u_.size();
  std::vector<double> out;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t k = (j + 1) % m;
    const bool in0 = u_[j] > level;
    const bool in1 = u_[k] > level;
    if (in0 == in1) continue;
    auto q = cell_model(*this, j);
    double s = solve_cell(q, level, u_[j] - level, u_[k] - level);
    out.push_back(theta(j) + s * cell_);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<double, double>> Profile::super_level_intervals(
    double level) const {
  auto cr = crossings(level);
  const bool inside0 = u_[0] > level;
  std::vector<std::pair<double, double>> out;
  if (cr.empty()) {
    if (inside0) out.emplace_back(-kPi, kPi);
    return out;
  }
  std::size_t i = 0;
  if (inside0) {
    out.emplace_back(-kPi, cr[0]);
    i = 1;
  }
  for (; i + 1 < cr.size(); i += 2) out.emplace_back(cr[i], cr[i + 1]);
  if (i < cr.size()) out.emplace_back(cr[i], kPi);
  return out;
}

// ------------------------------------------------------------- quadrature --

ArcQuadrature::ArcQuadrature(std::vector<double> g, std::vector<double> g1,
                             std::vector<double> g2, std::vector<double> g3)
    : g_(std::move(g)), g1_(std::move(g1)), g2_(std::move(g2)), g3_(std::move(g3)) {
  if (g_.size() < kMinGrid || g_.size() != g1_.size() || g_.size() != g2_.size() ||
      g_.size() != g3_.size()) {
    throw std::invalid_argument("quadrature arrays must have equal size >= 4");
  }
  cell_ = 2.0 * kPi / double(g_.size());
  prefix_.resize(g_.size() + 1);
  prefix_[0] = 0.0;
  for (std::size_t j = 0; j < g_.size(); ++j) prefix_[j + 1] = prefix_[j] + g_[j];
}

ArcQuadrature::ArcQuadrature(const Profile& u, const ConvexGauge& phi) {
  if (!phi.smooth()) {
    throw std::invalid_argument("chain-rule quadrature needs a smooth gauge");
  }
  const std::size_t m = u.grid();
  std::vector<double> g(m), g1(m), g2(m), g3(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = u.u()[j];
    const double p1 = phi.d1(t), p2 = phi.d2(t), p3 = phi.d3(t);
    const double a = u.u1()[j], b = u.u2()[j], c = u.u3()[j];
    g[j] = phi(t);
    g1[j] = p1 * a;
    g2[j] = p2 * a * a + p1 * b;
    g3[j] = p3 * a * a * a + 3.0 * p2 * a * b + p1 * c;
  }
  *this = ArcQuadrature(std::move(g), std::move(g1), std::move(g2), std::move(g3));
}

double ArcQuadrature::full_circle() const { return cell_ * prefix_[g_.size()]; }

double ArcQuadrature::cell_integral(std::size_t j, double s0, double s1) const {
  const std::size_t m = g_.size();
  const std::size_t k = (j + 1) % m;
  const double h = cell_;
  Quintic q(g_[j], h * g1_[j], h * h * g2_[j], g_[k], h * g1_[k], h * h * g2_[k]);
  return h * q.integral(s0, s1);
}

double ArcQuadrature::over_arc(double a, double b) const {
  const std::size_t m = g_.size();
  const double h = cell_;
  if (!(a <= b) || a < -kPi - 1e-9 || b > kPi + 1e-9) {
    throw std::invalid_argument("arc endpoints must satisfy -pi <= a <= b <= pi");
  }
  a = std::max(a, -kPi);
  b = std::min(b, kPi);
  auto to_x = [&](double t) {
    double x = (t + kPi) / h;
    double rx = std::round(x);
    return std::abs(x - rx) < 1e-9 ? rx : x;
  };
  const double xa = to_x(a), xb = to_x(b);
  const double ia = std::ceil(xa), ib = std::floor(xb);
  if (ia > ib) {  // both endpoints inside one cell
    auto j = std::size_t(std::floor(xa));
    return cell_integral(j, xa - double(j), xb - double(j));
  }
  double total = 0.0;
  if (xa < ia) {
    auto j = std::size_t(ia) - 1;
    total += cell_integral(j, xa - double(j), 1.0);
  }
  const auto i0 = std::size_t(ia), i1 = std::size_t(ib);
  if (i1 > i0) {
    const std::size_t n0 = i0 % m, n1 = i1 % m;
    // prefix difference sums nodes i0..i1-1; adjusting by half of both end
    // values yields the composite trapezoid over nodes i0..i1, then the
    // Euler-Maclaurin h^2 and h^4 endpoint terms correct it to O(h^6).
    total += h * (prefix_[i1] - prefix_[i0] + 0.5 * g_[n1] - 0.5 * g_[n0]);
    total += -(h * h / 12.0) * (g1_[n1] - g1_[n0]) +
             (h * h * h * h / 720.0) * (g3_[n1] - g3_[n0]);
  }
  if (xb > ib) {
    auto j = std::size_t(ib) % m;
    total += cell_integral(j, 0.0, xb - double(ib));
  }
  return total;
}

double ArcQuadrature::over(
    const std::vector<std::pair<double, double>>& intervals) const {
  double total = 0.0;
  for (auto [a, b] : intervals) total += over_arc(a, b);
  return total;
}

double ArcQuadrature::over(const ArcSet& e) const { return over(e.arcs()); }

// ------------------------------------------------------------- dual table --

DualTable dual_table(const Profile& u, const ConvexGauge& phi,
                     const std::vector<double>& taus) {
  if (!phi.nondecreasing()) {
    throw std::invalid_argument("dual table requires a nondecreasing gauge");
  }
  const auto kind = phi.kind();
  if (kind != ConvexGauge::Kind::Exp && kind != ConvexGauge::Kind::Hinge &&
      kind != ConvexGauge::Kind::Linear) {
    throw std::invalid_argument("dual table supports exp, hinge, and linear gauges");
  }
  for (std::size_t k = 1; k < taus.size(); ++k) {
    if (taus[k] > taus[k - 1]) {
      throw std::invalid_argument("dual table levels must be nonincreasing");
    }
  }
  const std::size_t m = u.grid();
  const bool is_exp = kind == ConvexGauge::Kind::Exp;
  const double scale = kind == ConvexGauge::Kind::Linear ? phi.d1(0.0) : 1.0;

  // Base quadrature: e^u for the exponential gauge, u itself otherwise.
  ArcQuadrature base =
      is_exp ? ArcQuadrature(u, ConvexGauge::exp_gauge())
             : ArcQuadrature(u.u(), u.u1(), u.u2(), u.u3());

  // Node indices by descending sample value; the superlevel set {u > tau}
  // only grows as tau decreases, so its intervals are maintained
  // incrementally across the level list.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return u.u()[a] != u.u()[b] ? u.u()[a] > u.u()[b] : a < b;
  });

  std::vector<char> present(m, 0);
  std::vector<std::size_t> partner(m, 0);
  std::set<std::size_t> starts;
  std::size_t inserted = 0, p = 0;

  auto insert_node = [&](std::size_t j) {
    const std::size_t l = (j + m - 1) % m;
    const std::size_t r = (j + 1) % m;
    const bool left = present[l] != 0, right = present[r] != 0;
    if (!left && !right) {
      partner[j] = j;
      starts.insert(j);
    } else if (left && !right) {
      std::size_t lo = partner[l];
      partner[lo] = j;
      partner[j] = lo;
    } else if (!left && right) {
      std::size_t hi = partner[r];
      partner[j] = hi;
      partner[hi] = j;
      starts.erase(r);
      starts.insert(j);
    } else {
      std::size_t lo = partner[l];
      std::size_t hi = partner[r];
      partner[lo] = hi;
      partner[hi] = lo;
      starts.erase(r);
    }
    present[j] = 1;
    ++inserted;
  };

  DualTable table;
  table.excess.resize(taus.size());
  table.measure.resize(taus.size());

  bool have_prev = false;
  double prev_eff = 0.0, prev_sub = 0.0;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const double tau = taus[k];
    const double eff = kind == ConvexGauge::Kind::Hinge ? std::max(tau, phi.t0()) : tau;
    // On {u > eff}, phi(u) - phi(tau) equals: e^u - e^tau (exp),
    // u - max(tau, t0) (hinge), a (u - tau) (linear).
    const double sub = is_exp ? std::exp(tau)
                              : (kind == ConvexGauge::Kind::Hinge ? eff : tau);
    if (have_prev && eff == prev_eff && sub == prev_sub) {
      table.excess[k] = table.excess[k - 1];
      table.measure[k] = table.measure[k - 1];
      continue;
    }
    while (p < m && u.u()[order[p]] > eff) insert_node(order[p++]);
    have_prev = true;
    prev_eff = eff;
    prev_sub = sub;
    if (inserted == 0) {
      table.excess[k] = 0.0;
      table.measure[k] = 0.0;
      continue;
    }
    if (inserted == m) {
      table.excess[k] = scale * (base.full_circle() - sub * 2.0 * kPi);
      table.measure[k] = 2.0 * kPi;
      continue;
    }
    double integral = 0.0, length = 0.0;
    for (std::size_t s : starts) {
      const std::size_t e = partner[s];
      const std::size_t cl = (s + m - 1) % m;
      auto ql = cell_model(u, cl);
      double sl = solve_cell(ql, eff, u.u()[cl] - eff, u.u()[s] - eff);
      double left = u.theta(cl) + sl * u.cell();
      auto qr = cell_model(u, e);
      double sr = solve_cell(qr, eff, u.u()[e] - eff, u.u()[(e + 1) % m] - eff);
      double right = u.theta(e) + sr * u.cell();
      if (left <= right) {
        integral += base.over_arc(left, right);
        length += right - left;
      } else {  // wraps through +-pi
        integral += base.over_arc(left, kPi) + base.over_arc(-kPi, right);
        length += (kPi - left) + (right + kPi);
      }
    }
    table.excess[k] = scale * (integral - sub * length);
    table.measure[k] = length;
  }
  return table;
}

// ----------------------------------------------------------- arc integral --

double gauge_arc_integral(const Profile& u, const ConvexGauge& phi, const ArcSet& e) {
  if (e.empty()) return 0.0;
  if (phi.smooth()) return ArcQuadrature(u, phi).over(e);
  if (phi.kind() != ConvexGauge::Kind::Hinge) {
    throw std::invalid_argument("arc integrals support smooth and hinge gauges");
  }
  const double t0 = phi.t0();
  auto pieces = intersect_intervals(u.super_level_intervals(t0), e.arcs());
  if (pieces.empty()) return 0.0;
  ArcQuadrature base(u.u(), u.u1(), u.u2(), u.u3());
  double total = 0.0;
  for (auto [a, b] : pieces) total += base.over_arc(a, b) - t0 * (b - a);
  return total;
}

// ----------------------------------------------------- public functionals --

double arclength(const MemberFunction& m, double r, std::size_t grid) {
  require_radius(r);
  if (grid == 0) grid = default_grid(m.fprime.order());
  auto samples = eval_on_circle(m.fprime, r, grid);
  std::vector<double> vals(samples.values.size());
  for (std::size_t j = 0; j < vals.size(); ++j) {
    vals[j] = r * std::abs(samples.values[j]);
  }
  return trapezoid_sum(vals);
}

double integral_mean(const MemberFunction& m, const SubharmonicGauge& gauge,
                     double r, std::size_t grid) {
  require_radius(r);
  if (grid == 0) grid = default_grid(m.log_fprime.order());

  const auto kind = gauge.kind();
  if ((kind == SubharmonicGauge::Kind::ConvexOfRe ||
       kind == SubharmonicGauge::Kind::ConvexOfIm) &&
      !gauge.phi().smooth()) {
    AnalyticCircle circle(m.log_fprime, r, grid);
    Profile u(circle,
              kind == SubharmonicGauge::Kind::ConvexOfRe ? Profile::Part::Re
                                                         : Profile::Part::Im,
              double(gauge.sign()));
    return gauge_arc_integral(u, gauge.phi(), ArcSet::full_circle());
  }

  auto evaluate = [&](std::size_t g) {
    auto samples = eval_on_circle(m.log_fprime, r, g);
    std::vector<double> vals(samples.values.size());
    bool clamped = false;
    bool all_zero = true;
    for (std::size_t j = 0; j < vals.size(); ++j) {
      vals[j] = gauge(samples.values[j]);
      if (kind == SubharmonicGauge::Kind::LogAbs) {
        if (vals[j] <= kLogClamp) clamped = true;
        if (std::abs(samples.values[j]) != 0.0) all_zero = false;
      }
    }
    return std::tuple<double, bool, bool>(trapezoid_sum(vals), clamped, all_zero);
  };

  auto [value, clamped, all_zero] = evaluate(grid);
  if (kind == SubharmonicGauge::Kind::LogAbs) {
    if (all_zero) return -std::numeric_limits<double>::infinity();
    if (clamped) {
      // Integrable singularity on the circle: report the doubled-grid value.
      value = std::get<0>(evaluate(2 * grid));
    }
  }
  return value;
}

double partial_arclength(const MemberFunction& m, const ArcSet& e, double r,
                         std::size_t grid) {
  require_radius(r);
  if (e.empty()) return 0.0;
  if (grid == 0) grid = default_grid(m.log_fprime.order());
  AnalyticCircle circle(m.log_fprime, r, grid);
  Profile u(circle, Profile::Part::Re, +1.0);
  return r * gauge_arc_integral(u, ConvexGauge::exp_gauge(), e);
}

double partial_mean(const MemberFunction& m, const ConvexGauge& phi,
                    const ArcSet& e, double r, std::size_t grid) {
  require_radius(r);
  if (!phi.nondecreasing()) {
    throw std::invalid_argument("partial means require a nondecreasing gauge");
  }
  if (e.empty()) return 0.0;
  if (grid == 0) grid = default_grid(m.log_fprime.order());
  AnalyticCircle circle(m.log_fprime, r, grid);
  Profile u(circle, Profile::Part::Re, +1.0);
  return gauge_arc_integral(u, phi, e);
}

// ---------------------------------------------------------- sweep helpers --

ArcSet random_arcset(std::mt19937_64& rng, std::size_t max_arcs) {
  if (max_arcs == 0) throw std::invalid_argument("max_arcs must be positive");
  const auto count = 1 + std::size_t(uniform01(rng) * double(max_arcs)) % max_arcs;
  std::vector<double> ends(2 * count);
  for (auto& v : ends) v = -kPi + 2.0 * kPi * uniform01(rng);
  std::sort(ends.begin(), ends.end());
  std::vector<std::pair<double, double>> arcs(count);
  for (std::size_t i = 0; i < count; ++i) arcs[i] = {ends[2 * i], ends[2 * i + 1]};
  return ArcSet::from_arcs(std::move(arcs));
}

ArcSet greedy_top_cells(const Profile& u, double target_measure) {
  if (!(target_measure > 0.0) || target_measure > 2.0 * kPi + 1e-12) {
    throw std::invalid_argument("target measure must lie in (0, 2 pi]");
  }
  const std::size_t m = u.grid();
  const double h = u.cell();
  auto cells = std::size_t(std::llround(target_measure / h));
  cells = std::min(std::max<std::size_t>(cells, 1), m);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double va = u.u()[a] + u.u()[(a + 1) % m];
    const double vb = u.u()[b] + u.u()[(b + 1) % m];
    return va != vb ? va > vb : a < b;
  });
  std::vector<std::size_t> take(order.begin(), order.begin() + long(cells));
  std::sort(take.begin(), take.end());
  std::vector<std::pair<double, double>> arcs;
  std::size_t run = 0;
  while (run < take.size()) {
    std::size_t end = run;
    while (end + 1 < take.size() && take[end + 1] == take[end] + 1) ++end;
    arcs.emplace_back(u.theta(take[run]), u.theta(take[end]) + h);
    run = end + 1;
  }
  return ArcSet::from_arcs(std::move(arcs));
}

}  // namespace arcmax
