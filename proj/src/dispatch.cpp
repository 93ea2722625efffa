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

#include "twospin/dispatch.hpp"

#include "twospin/errors.hpp"
#include "twospin/propagators.hpp"
#include "twospin/reductions.hpp"
#include "twospin/spectrum.hpp"

#include <cmath>

namespace twospin {
namespace {

std::optional<Vec3> as_constant(const FieldSpec& f) {
  if (std::holds_alternative<ZeroField>(f)) {
    return Vec3::Zero();
  }
  if (const auto* c = std::get_if<ConstantField>(&f)) {
    return c->vector;
  }
  if (const auto* p = std::get_if<ParallelZField>(&f); p && p->profile.is_constant()) {
    return Vec3(0.0, 0.0, p->profile.constant_value());
  }
  return std::nullopt;
}

bool is_zero(const FieldSpec& f) {
  const auto c = as_constant(f);
  return c && c->isZero(0.0);
}

bool along_z(const Vec3& v) { return v(0) == 0.0 && v(1) == 0.0; }

std::optional<ScalarProfile> as_parallel_z(const FieldSpec& f) {
  if (const auto* p = std::get_if<ParallelZField>(&f)) {
    return p->profile;
  }
  if (const auto c = as_constant(f); c && along_z(*c)) {
    return ScalarProfile::constant((*c)(2));
  }
  return std::nullopt;
}

std::optional<double> drive_frequency(const FieldSpec& g, const FieldSpec& f) {
  if (const auto* r = std::get_if<RabiField>(&f)) {
    return r->omega;
  }
  if (const auto* r = std::get_if<RabiField>(&g)) {
    return r->omega;
  }
  return std::nullopt;
}

// A constant field along z is a Rabi field of zero amplitude at any frequency.
std::optional<RabiField> as_rabi(const FieldSpec& f, double omega) {
  if (const auto* r = std::get_if<RabiField>(&f)) {
    if (r->omega == omega) {
      return *r;
    }
    return std::nullopt;
  }
  if (const auto c = as_constant(f); c && along_z(*c)) {
    return RabiField(0.0, (*c)(2), omega, 0.0);
  }
  return std::nullopt;
}

CMat4 spectral_evolution(const SpectralResult& levels, double scaled_tau) {
  CMat4 u = CMat4::Zero();
  for (std::size_t i = 0; i < 4; ++i) {
    const CVec4& c = levels.vectors[i];
    u += std::exp(-kI * (levels.roots[i] * scaled_tau)) * (c * c.adjoint());
  }
  return u;
}

CMat4 parallel_reduction_matrix(const ParallelReduction& red, double t1) {
  CMat4 m = CMat4::Zero();
  m(0, 0) = red.v1_phase(t1);
  m(3, 3) = red.v4_phase(t1);
  const CVec2 up = reduced_state(red, CVec2(1.0, 0.0), t1, SpinorConvention::Primed);
  const CVec2 down = reduced_state(red, CVec2(0.0, 1.0), t1, SpinorConvention::Primed);
  m.block<2, 1>(1, 1) = up;
  m.block<2, 1>(1, 2) = down;
  return m;
}

}  // namespace

std::optional<Method> closed_form_family(const TwoSpinProblem& p) {
  if (is_zero(p.G) && is_zero(p.F)) {
    return Method::FreeInteraction;
  }
  if (p.J.is_constant() && p.J.constant_value() == 0.0) {
    return Method::Noninteracting;
  }
  if (p.G == p.F) {
    return std::holds_alternative<RabiField>(p.G) ? Method::EqualRabi : Method::EqualFields;
  }
  if (p.J.is_constant()) {
    const auto g = as_constant(p.G);
    const auto f = as_constant(p.F);
    if (g && f) {
      return along_z(*g) && along_z(*f) ? Method::ConstantParallel : Method::ConstantSpectral;
    }
    if (const auto w = drive_frequency(p.G, p.F); w && as_rabi(p.G, *w) && as_rabi(p.F, *w)) {
      return Method::RotatingFrameSpectral;
    }
  }
  const auto b1 = as_parallel_z(p.G);
  const auto b2 = as_parallel_z(p.F);
  if (b1 && b2 && reduce_parallel(*b1, *b2, p.J, p.t0).kind == ReductionCase::ConstantField) {
    return Method::ParallelReduction;
  }
  return std::nullopt;
}

Propagator propagate_closed(const TwoSpinProblem& p, double t0, double t1) {
  const auto family = closed_form_family(p);
  if (!family) {
    throw Error(ErrorKind::NoClosedForm,
                "no closed-form propagator for this combination of fields and interaction");
  }
  switch (*family) {
    case Method::FreeInteraction:
      return prop_free_interaction(p.J, t0, t1);
    case Method::Noninteracting:
      return prop_noninteracting(p.G, p.F, t0, t1);
    case Method::EqualRabi: {
      const auto& r = std::get<RabiField>(p.G);
      const RabiParams rp = RabiParams::make(r.A, r.A0, r.omega);
      // The phase offset is a fixed rotation about z of both spins.
      const CMat4 shift = rotating_frame(1.0, r.phi);
      Propagator out = prop_equal_rabi(rp, p.J, t0, t1);
      out.matrix = shift * out.matrix * shift.adjoint();
      return out;
    }
    case Method::EqualFields:
      return prop_equal_fields(p.G, p.J, t0, t1);
    case Method::ConstantParallel: {
      Propagator out = prop_constant_parallel(0.5 * p.J.constant_value(), (*as_constant(p.G))(2),
                                              (*as_constant(p.F))(2), t1 - t0);
      out.t0 = t0;
      out.t1 = t1;
      return out;
    }
    case Method::ConstantSpectral: {
      const auto levels = solve_levels(0.5 * p.J.constant_value(), *as_constant(p.F), *as_constant(p.G));
      return {spectral_evolution(levels, t1 - t0), t0, t1, Method::ConstantSpectral};
    }
    case Method::RotatingFrameSpectral: {
      const double w = *drive_frequency(p.G, p.F);
      const auto rf = rotating_frame_reduce(*as_rabi(p.F, w), *as_rabi(p.G, w), p.J.constant_value());
      const auto levels = solve_levels(rf.gamma, rf.a, rf.b);
      const CMat4 m = rotating_frame(w, t1) * spectral_evolution(levels, w * (t1 - t0)) *
                      rotating_frame(w, t0).adjoint();
      return {m, t0, t1, Method::RotatingFrameSpectral};
    }
    case Method::ParallelReduction: {
      const auto red = reduce_parallel(*as_parallel_z(p.G), *as_parallel_z(p.F), p.J, t0);
      return {parallel_reduction_matrix(red, t1), t0, t1, Method::ParallelReduction};
    }
    default:
      break;
  }
  throw Error(ErrorKind::NoClosedForm, "unhandled closed-form family");
}

Propagator propagate(const TwoSpinProblem& p, double t1, MethodChoice choice,
                     const IntegratorConfig& cfg) {
  if (choice != MethodChoice::Oracle && (choice == MethodChoice::Closed || closed_form_family(p))) {
    return propagate_closed(p, p.t0, t1);
  }
  return integrate_propagator(p, p.t0, t1, cfg).propagator;
}

}  // namespace twospin
