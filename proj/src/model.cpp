// Copyright 2026 The twospin Authors
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

#include "twospin/model.hpp"

#include "twospin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace twospin {
namespace {

// Three-point endpoint slope with the shape-preserving clamps used by PCHIP.
double pchip_end_slope(double h0, double h1, double d0, double d1) {
  double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (std::signbit(m) != std::signbit(d0) || m == 0.0) {
    return 0.0;
  }
  if (std::signbit(d0) != std::signbit(d1) && std::abs(m) > std::abs(3.0 * d0)) {
    return 3.0 * d0;
  }
  return m;
}

std::vector<double> pchip_slopes(const std::vector<Knot>& k) {
  const std::size_t n = k.size();
  std::vector<double> h(n - 1), d(n - 1), m(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = k[i + 1].t - k[i].t;
    d[i] = (k[i + 1].value - k[i].value) / h[i];
  }
  if (n == 2) {
    m[0] = m[1] = d[0];
    return m;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  m[0] = pchip_end_slope(h[0], h[1], d[0], d[1]);
  m[n - 1] = pchip_end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  return m;
}

}  // namespace

ScalarProfile ScalarProfile::constant(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "constant profile value must be finite");
  }
  ScalarProfile p;
  p.value_ = value;
  return p;
}

ScalarProfile ScalarProfile::samples(std::vector<Knot> knots, Interpolation interp) {
  if (knots.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "sampled profile needs at least two knots");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].t) || !std::isfinite(knots[i].value)) {
      throw Error(ErrorKind::InvalidArgument, "sampled profile knots must be finite");
    }
    if (i > 0 && !(knots[i].t > knots[i - 1].t)) {
      throw Error(ErrorKind::InvalidArgument, "sampled profile knots must be strictly increasing in t");
    }
  }
  ScalarProfile p;
  p.interp_ = interp;
  if (interp == Interpolation::MonotoneCubic) {
    p.slopes_ = pchip_slopes(knots);
  }
  p.knots_ = std::move(knots);
  return p;
}

std::pair<double, double> ScalarProfile::span() const {
  if (is_constant()) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {-inf, inf};
  }
  return {knots_.front().t, knots_.back().t};
}

void ScalarProfile::check_in_span(double t) const {
  const auto [lo, hi] = span();
  if (!(t >= lo && t <= hi)) {
    std::ostringstream msg;
    msg << "t = " << t << " outside sampled span [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::OutOfRange, msg.str());
  }
}

std::size_t ScalarProfile::interval_of(double t) const {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                   [](double v, const Knot& k) { return v < k.t; });
  const auto idx = static_cast<std::size_t>(std::distance(knots_.begin(), it));
  return std::clamp<std::size_t>(idx == 0 ? 0 : idx - 1, 0, knots_.size() - 2);
}

double ScalarProfile::eval_in(std::size_t k, double t) const {
  const Knot& a = knots_[k];
  const Knot& b = knots_[k + 1];
  const double h = b.t - a.t;
  const double s = (t - a.t) / h;
  if (interp_ == Interpolation::Linear) {
    return a.value + s * (b.value - a.value);
  }
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * a.value + h10 * h * slopes_[k] + h01 * b.value + h11 * h * slopes_[k + 1];
}

double ScalarProfile::value_at(double t) const {
  if (is_constant()) {
    return value_;
  }
  check_in_span(t);
  return eval_in(interval_of(t), t);
}

double ScalarProfile::integral(double a, double b) const {
  if (a == b) {
    return 0.0;
  }
  if (is_constant()) {
    return value_ * (b - a);
  }
  if (a > b) {
    return -integral(b, a);
  }
  check_in_span(a);
  check_in_span(b);
  double total = 0.0;
  std::size_t k = interval_of(a);
  double lo = a;
  while (lo < b) {
    const double hi = std::min(b, knots_[k + 1].t);
    if (hi > lo) {
      const double mid = 0.5 * (lo + hi);
      total += (hi - lo) / 6.0 * (eval_in(k, lo) + 4.0 * eval_in(k, mid) + eval_in(k, hi));
    }
    lo = hi;
    if (k + 2 >= knots_.size()) {
      break;
    }
    ++k;
  }
  return total;
}

double interaction_integral(const ScalarProfile& j, double t0, double t) { return j.integral(t0, t); }

RabiField::RabiField(double amplitude, double longitudinal, double drive, double phase)
    : A(amplitude), A0(longitudinal), omega(drive), phi(phase) {
  if (omega == 0.0 || !std::isfinite(omega)) {
    throw Error(ErrorKind::ZeroDriveFrequency, "Rabi field requires a nonzero finite drive frequency");
  }
  if (!std::isfinite(A) || !std::isfinite(A0) || !std::isfinite(phi)) {
    throw Error(ErrorKind::InvalidArgument, "Rabi field parameters must be finite");
  }
}

Vec3 field_at(const FieldSpec& f, double t) {
  struct Visitor {
    double t;
    Vec3 operator()(const ZeroField&) const { return Vec3::Zero(); }
    Vec3 operator()(const ConstantField& c) const { return c.vector; }
    Vec3 operator()(const RabiField& r) const {
      const double arg = r.omega * t + r.phi;
      return {r.A * std::cos(arg), r.A * std::sin(arg), r.A0};
    }
    Vec3 operator()(const ParallelZField& p) const { return {0.0, 0.0, p.profile.value_at(t)}; }
  };
  return std::visit(Visitor{t}, f);
}

std::pair<double, double> field_span(const FieldSpec& f) {
  if (const auto* p = std::get_if<ParallelZField>(&f)) {
    return p->profile.span();
  }
  return ScalarProfile::constant(0.0).span();
}

CMat4 StationaryBasis::matrix() const {
  CMat4 m;
  for (int i = 0; i < 4; ++i) {
    m.col(i) = states[static_cast<std::size_t>(i)];
  }
  return m;
}

StationaryBasis stationary_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  StationaryBasis b;
  b.states[0] = theta(1);
  b.states[1] = r * (theta(2) + theta(3));
  b.states[2] = r * (theta(3) - theta(2));
  b.states[3] = theta(4);
  return b;
}

}  // namespace twospin
