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

#include "twospin/propagators.hpp"

#include "twospin/errors.hpp"
#include "twospin/hamiltonian.hpp"

#include <cmath>

namespace twospin {

std::string_view method_label(Method m) {
  switch (m) {
    case Method::Identity: return "identity";
    case Method::FreeInteraction: return "free_interaction";
    case Method::Noninteracting: return "noninteracting_product";
    case Method::EqualFields: return "equal_fields_composition";
    case Method::ConstantParallel: return "constant_parallel";
    case Method::RabiSecondSpin: return "rabi_second_spin";
    case Method::EqualRabi: return "equal_rabi_composition";
    case Method::ConstantSpectral: return "constant_spectral";
    case Method::RotatingFrameSpectral: return "rotating_frame_spectral";
    case Method::ParallelReduction: return "parallel_reduction";
    case Method::Oracle: return "oracle_rk4";
  }
  return "unknown";
}

namespace {

// r_z(theta) = exp(-i sigma_3 theta / 2).
CMat2 rz(double theta) {
  CMat2 r = CMat2::Zero();
  r(0, 0) = std::exp(-kI * (0.5 * theta));
  r(1, 1) = std::exp(kI * (0.5 * theta));
  return r;
}

// Rotating-frame field A s1 + (A0 - w/2) s3.
Vec3 rotating_field(double A, double A0, double omega) { return {A, 0.0, A0 - 0.5 * omega}; }

// Literal bracket with s2, s3 replaced by the 4x4 generators y, z.
std::optional<CMat4> rabi_bracket(const RabiParams& rp, double x, const CMat4& y, const CMat4& z) {
  const double den = rp.denominator();
  if (den < RabiParams::kDegenerateDenominator) {
    return std::nullopt;
  }
  const CMat4 m = rp.alpha * CMat4::Identity() - kI * rp.a_prime * y;
  return CMat4(CMat4::Identity() * std::cos(x) + (m * m / den) * (kI * z) * std::sin(x));
}

}  // namespace

RabiParams RabiParams::make(double A, double A0, double omega) {
  if (omega == 0.0 || !std::isfinite(omega)) {
    throw Error(ErrorKind::ZeroDriveFrequency, "Rabi parameters require a nonzero drive frequency");
  }
  RabiParams rp;
  rp.A = A;
  rp.A0 = A0;
  rp.omega = omega;
  rp.a_prime = A / omega;
  rp.a0 = A0 / omega - 0.5;
  rp.omega_R = std::hypot(A, A0 - 0.5 * omega);
  const double k = rp.omega_R / omega;
  // alpha = a0 - k loses all digits when a' -> 0 and a0, k share a sign;
  // (a0^2 - k^2) = -a'^2 gives the same value without cancellation.
  if (rp.a0 != 0.0 && std::signbit(rp.a0) == std::signbit(k)) {
    rp.alpha = -(rp.a_prime * rp.a_prime) / (rp.a0 + k);
  } else {
    rp.alpha = rp.a0 - k;
  }
  return rp;
}

double sinc(double x) {
  if (std::abs(x) < 1e-6) {
    return 1.0 - x * x / 6.0;
  }
  return std::sin(x) / x;
}

CMat2 su2_exp(const Vec3& v, double tau) {
  const double n = v.norm();
  return CMat2::Identity() * std::cos(n * tau) - kI * tau * sinc(n * tau) * sigma_dot(v);
}

CMat2 rabi_one_spin(const RabiParams& rp, double t) {
  const double den = rp.denominator();
  if (den < RabiParams::kDegenerateDenominator) {
    throw Error(ErrorKind::DegenerateDenominator,
                "alpha^2 + a'^2 vanishes; use the rotating-frame form");
  }
  const double x = rp.omega_R * t;
  const CMat2 m = rp.alpha * CMat2::Identity() - kI * rp.a_prime * pauli(2);
  const CMat2 bracket =
      CMat2::Identity() * std::cos(x) + (m * m / den) * (kI * pauli(3)) * std::sin(x);
  return rz(rp.omega * t) * bracket;
}

CMat2 rabi_one_spin_rotating(const RabiParams& rp, double t) {
  return rz(rp.omega * t) * su2_exp(rotating_field(rp.A, rp.A0, rp.omega), t);
}

CMat2 one_spin_propagator(const FieldSpec& f, double t0, double t1) {
  struct Visitor {
    double t0, t1;
    CMat2 operator()(const ZeroField&) const { return CMat2::Identity(); }
    CMat2 operator()(const ConstantField& c) const { return su2_exp(c.vector, t1 - t0); }
    CMat2 operator()(const RabiField& r) const {
      return rz(r.omega * t1 + r.phi) * su2_exp(rotating_field(r.A, r.A0, r.omega), t1 - t0) *
             rz(r.omega * t0 + r.phi).adjoint();
    }
    CMat2 operator()(const ParallelZField& p) const {
      const double phase = p.profile.integral(t0, t1);
      CMat2 u = CMat2::Zero();
      u(0, 0) = std::exp(-kI * phase);
      u(1, 1) = std::exp(kI * phase);
      return u;
    }
  };
  return std::visit(Visitor{t0, t1}, f);
}

CMat4 exchange_rotation(double phi) {
  return std::exp(kI * (0.5 * phi)) *
         (CMat4::Identity() * std::cos(phi) - kI * swap_matrix() * std::sin(phi));
}

Propagator prop_free_interaction(const ScalarProfile& j, double t0, double t1) {
  return {exchange_rotation(j.integral(t0, t1)), t0, t1, Method::FreeInteraction};
}

Propagator prop_noninteracting(const FieldSpec& g, const FieldSpec& f, double t0, double t1) {
  const CMat2 id = CMat2::Identity();
  const CMat4 m = kron(one_spin_propagator(g, t0, t1), id) * kron(id, one_spin_propagator(f, t0, t1));
  return {m, t0, t1, Method::Noninteracting};
}

CMat4 prop_noninteracting_swap_form(const FieldSpec& g, const FieldSpec& f, double t0, double t1) {
  const CMat2 id = CMat2::Identity();
  const CMat4 a = swap_matrix();
  return a * kron(id, one_spin_propagator(g, t0, t1)) * a * kron(id, one_spin_propagator(f, t0, t1));
}

Propagator prop_equal_fields(const FieldSpec& g, const ScalarProfile& j, double t0, double t1) {
  const CMat2 u = one_spin_propagator(g, t0, t1);
  const CMat2 id = CMat2::Identity();
  const CMat4 m = exchange_rotation(j.integral(t0, t1)) * kron(u, id) * kron(id, u);
  return {m, t0, t1, Method::EqualFields};
}

Propagator prop_constant_parallel(double gamma, double a, double b, double tau) {
  const double p = a + b;
  const double q = a - b;
  const double big_omega = std::sqrt(4.0 * gamma * gamma + q * q);
  const CMat4 id = CMat4::Identity();
  const CMat4 zz = rho(3) * Sigma(3);
  const CMat4 triplet = (id + zz) * std::cos(p * tau) - kI * (rho(3) + Sigma(3)) * std::sin(p * tau);
  const CMat4 mixing = q * (rho(3) - Sigma(3)) + 2.0 * gamma * (rho(1) * Sigma(1) + rho(2) * Sigma(2));
  const CMat4 inner =
      (id - zz) * std::cos(big_omega * tau) - kI * mixing * (tau * sinc(big_omega * tau));
  const CMat4 u = 0.5 * (triplet * std::exp(-kI * gamma * tau) + inner * std::exp(kI * gamma * tau));
  return {u, 0.0, tau, Method::ConstantParallel};
}

std::optional<CMat4> rabi_bracket_sigma(const RabiParams& rp, double x) {
  return rabi_bracket(rp, x, Sigma(2), Sigma(3));
}

std::optional<CMat4> rabi_bracket_rho(const RabiParams& rp, double x) {
  return rabi_bracket(rp, x, rho(2), rho(3));
}

Propagator prop_rabi_second_spin(const RabiParams& rp, double t) {
  const CMat2 id = CMat2::Identity();
  const CMat4 frame = kron(id, rz(rp.omega * t));
  CMat4 m;
  if (auto bracket = rabi_bracket_sigma(rp, rp.omega_R * t)) {
    m = frame * *bracket;
  } else {
    m = frame * kron(id, su2_exp(rotating_field(rp.A, rp.A0, rp.omega), t));
  }
  return {m, 0.0, t, Method::RabiSecondSpin};
}

Propagator prop_equal_rabi(const RabiParams& rp, const ScalarProfile& j, double t0, double t) {
  const double tau = t - t0;
  const double phi = j.integral(t0, t);
  const auto frame = [&rp](double s) {
    const CMat2 r = rz(rp.omega * s);
    return kron(r, r);
  };
  CMat4 local;
  const auto bs = rabi_bracket_sigma(rp, rp.omega_R * tau);
  const auto br = rabi_bracket_rho(rp, rp.omega_R * tau);
  if (bs && br) {
    local = *br * *bs;
  } else {
    const CMat2 e = su2_exp(rotating_field(rp.A, rp.A0, rp.omega), tau);
    local = kron(e, e);
  }
  CMat4 m = frame(t) * exchange_rotation(phi) * local;
  if (t0 != 0.0) {
    m = m * frame(t0).adjoint();
  }
  return {m, t0, t, Method::EqualRabi};
}

double reparameterize_check(const TwoSpinProblem& p, const TimeMap& map, double t,
                            const IntegratorConfig& cfg) {
  const double s = map.map(t);
  const CMat4 base = integrate_propagator(p, p.t0, s, cfg).propagator.matrix;
  const auto ham = [&p](double u) { return two_spin_H(p, u).matrix; };
  // Trajectory near s: short fine RK4 hops from the anchored state.
  const auto state = [&](double tau) -> CMat4 {
    return ode::rk4_fixed(ham, base, s, map.map(tau), 16);
  };
  const auto reparam_ham = [&](double tau) -> CMat4 {
    return map.rate(tau) * two_spin_H(p, map.map(tau)).matrix;
  };
  return schrodinger_residual(state, reparam_ham, t);
}

}  // namespace twospin
