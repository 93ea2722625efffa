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

#include "twospin/reductions.hpp"

#include "twospin/errors.hpp"
#include "twospin/oracle.hpp"
#include "twospin/propagators.hpp"
#include "twospin/spectrum.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace twospin {
namespace {

// B1 - B2 when it is the same number everywhere on the span.
std::optional<double> constant_difference(const ScalarProfile& b1, const ScalarProfile& b2) {
  if (b1.is_constant() && b2.is_constant()) {
    return b1.constant_value() - b2.constant_value();
  }
  if (b1.is_constant() || b2.is_constant() || b1.interpolation() != b2.interpolation()) {
    return std::nullopt;
  }
  const auto& k1 = b1.knots();
  const auto& k2 = b2.knots();
  if (k1.size() != k2.size()) {
    return std::nullopt;
  }
  const double eps = k1.front().value - k2.front().value;
  double scale = 1.0;
  for (std::size_t i = 0; i < k1.size(); ++i) {
    scale = std::max({scale, std::abs(k1[i].value), std::abs(k2[i].value)});
  }
  for (std::size_t i = 0; i < k1.size(); ++i) {
    if (k1[i].t != k2[i].t || std::abs((k1[i].value - k2[i].value) - eps) > 1e-14 * scale) {
      return std::nullopt;
    }
  }
  return eps;
}

}  // namespace

Vec3 ParallelReduction::reduced_field(double t) const { return {J.value_at(t), 0.0, b_minus(t)}; }

Complex ParallelReduction::v1_phase(double t) const {
  const double phase = 0.5 * J.integral(t0, t) + B1.integral(t0, t) + B2.integral(t0, t);
  return std::exp(-kI * phase);
}

Complex ParallelReduction::v4_phase(double t) const {
  const double phase = 0.5 * J.integral(t0, t) - B1.integral(t0, t) - B2.integral(t0, t);
  return std::exp(-kI * phase);
}

double ParallelReduction::phase_accumulator(double t) const { return 0.5 * J.integral(t0, t); }

Complex ParallelReduction::phase_factor(double t) const {
  return std::exp(kI * phase_accumulator(t));
}

ParallelReduction reduce_parallel(const ScalarProfile& b1, const ScalarProfile& b2,
                                  const ScalarProfile& j, double t0) {
  ParallelReduction red;
  red.B1 = b1;
  red.B2 = b2;
  red.J = j;
  red.t0 = t0;
  const auto diff = constant_difference(b1, b2);
  if (diff) {
    red.difference = *diff;
  }
  if (j.is_constant() && diff) {
    red.kind = ReductionCase::ConstantField;
  } else if (j.is_constant()) {
    red.kind = ReductionCase::ConstantInteraction;
  } else if (diff) {
    red.kind = ReductionCase::ConstantDifference;
  } else {
    red.kind = ReductionCase::General;
  }
  return red;
}

CVec2 reduced_state(const ParallelReduction& red, const CVec2& psi0, double t,
                    SpinorConvention convention) {
  CVec2 psi;
  switch (red.kind) {
    case ReductionCase::ConstantField: {
      const Vec3 k(red.J.constant_value(), 0.0, red.difference);
      psi = su2_exp(k, t - red.t0) * psi0;
      break;
    }
    case ReductionCase::ConstantDifference: {
      const auto field = [&red](double s) -> CMat2 {
        return sigma_dot(Vec3(red.difference, 0.0, red.J.value_at(s)));
      };
      psi = km_map(ode::rk4_anchored(field, km_map(psi0), red.t0, t, red.reduced_step));
      break;
    }
    case ReductionCase::ConstantInteraction:
    case ReductionCase::General: {
      const auto field = [&red](double s) -> CMat2 { return sigma_dot(red.reduced_field(s)); };
      psi = ode::rk4_anchored(field, psi0, red.t0, t, red.reduced_step);
      break;
    }
  }
  if (convention == SpinorConvention::Primed) {
    psi *= red.phase_factor(t);
  }
  return psi;
}

CVec4 assemble_parallel(const ParallelReduction& red, Complex c1, Complex c4, const CVec2& psi0,
                        double t) {
  const CVec2 middle = reduced_state(red, psi0, t, SpinorConvention::Primed);
  CVec4 out;
  out << c1 * red.v1_phase(t), middle(0), middle(1), c4 * red.v4_phase(t);
  return out;
}

CMat2 km_matrix() { return (pauli(1) + pauli(3)) / std::sqrt(2.0); }

CVec2 km_map(const CVec2& phi) { return km_matrix() * phi; }

CMat2 rotation_to_axis(const Vec3& n) {
  const double len = n.norm();
  if (!(len > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "axis must be a nonzero vector");
  }
  const Vec3 u = n / len;
  const Vec3 z(0.0, 0.0, 1.0);
  Vec3 axis = z.cross(u);
  const double s = axis.norm();
  if (s < 1e-15) {
    if (u(2) > 0.0) {
      return CMat2::Identity();
    }
    return -kI * pauli(1);
  }
  axis /= s;
  const double angle = std::atan2(s, u(2));
  return CMat2::Identity() * std::cos(0.5 * angle) - kI * std::sin(0.5 * angle) * sigma_dot(axis);
}

CVec4 assemble_parallel_along(const Vec3& n, const ParallelReduction& red, Complex c1, Complex c4,
                              const CVec2& psi0, double t) {
  const CMat2 r = rotation_to_axis(n);
  return kron(r, r) * assemble_parallel(red, c1, c4, psi0, t);
}

RotatingFrameProblem rotating_frame_reduce(const RabiField& f, const RabiField& g, double j) {
  if (f.omega == 0.0 || g.omega == 0.0) {
    throw Error(ErrorKind::ZeroDriveFrequency, "rotating frame needs a nonzero drive frequency");
  }
  if (f.omega != g.omega) {
    throw Error(ErrorKind::InvalidArgument, "both Rabi fields must share the drive frequency");
  }
  const double w = f.omega;
  RotatingFrameProblem rf;
  rf.omega = w;
  rf.gamma = j / (2.0 * w);
  rf.a = Vec3(f.A / w * std::cos(f.phi), f.A / w * std::sin(f.phi), f.A0 / w - 0.5);
  rf.b = Vec3(g.A / w * std::cos(g.phi), g.A / w * std::sin(g.phi), g.A0 / w - 0.5);
  return rf;
}

CMat4 rotating_frame(double omega, double t) {
  CMat4 r = CMat4::Zero();
  const CMat4 gen = Sigma(3) + rho(3);
  for (int i = 0; i < 4; ++i) {
    r(i, i) = std::exp(-kI * (0.5 * omega * t) * gen(i, i).real());
  }
  return r;
}

CVec4 rotating_frame_solution(const RotatingFrameProblem& rf, double lambda, const CVec4& c, double t) {
  const double scale = std::max({std::abs(rf.gamma), rf.a.norm(), rf.b.norm(), 1.0});
  const double defect = (build_D(rf.gamma, rf.a, rf.b, lambda) * c).norm();
  if (defect > 1e-8 * scale) {
    std::ostringstream msg;
    msg << "||D(lambda) C|| = " << defect << " for lambda = " << lambda;
    throw Error(ErrorKind::NotAnEigenpair, msg.str());
  }
  return std::exp(-kI * (lambda * rf.omega * t)) * (rotating_frame(rf.omega, t) * c);
}

}  // namespace twospin
