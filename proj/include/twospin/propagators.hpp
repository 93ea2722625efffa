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

#pragma once

// Closed-form evolution operators for the exactly solvable two-spin
// configurations, plus the one-spin propagators they are built from.

#include "twospin/model.hpp"
#include "twospin/numlin.hpp"
#include "twospin/oracle.hpp"
#include "twospin/propagator.hpp"

#include <functional>
#include <optional>

namespace twospin {

/// Rabi drive (A cos wt, A sin wt, A0) in the reduced variables of the
/// rotating frame:  a' = A/w,  a0 = A0/w - 1/2,  w_R = sqrt(A^2 + (A0 - w/2)^2),
/// alpha = a0 - w_R/w.
struct RabiParams {
  double A = 0.0;
  double A0 = 0.0;
  double omega = 1.0;
  double a_prime = 0.0;
  double a0 = 0.0;
  double omega_R = 0.0;
  double alpha = 0.0;

  /// Throws Error(ZeroDriveFrequency) for omega == 0.
  static RabiParams make(double A, double A0, double omega);

  /// w_R / w (carries the sign of w).
  [[nodiscard]] double ratio() const { return omega_R / omega; }
  /// alpha^2 + a'^2.
  [[nodiscard]] double denominator() const { return alpha * alpha + a_prime * a_prime; }
  /// Threshold below which the literal Rabi formula is indeterminate.
  static constexpr double kDegenerateDenominator = 1e-14;
};

/// sin(x)/x with a series branch for |x| < 1e-6.
double sinc(double x);

/// exp(-i (sigma . v) tau) in closed form.
CMat2 su2_exp(const Vec3& v, double tau);

/// One-spin Rabi propagator in the literal form
///   r_z(wt) [ I cos w_R t + ((alpha - i a' s2)^2 / (alpha^2 + a'^2)) i s3 sin w_R t ].
/// Throws Error(DegenerateDenominator) when alpha^2 + a'^2 < 1e-14.
CMat2 rabi_one_spin(const RabiParams& rp, double t);

/// The same propagator as the rotating-frame product
///   exp(-i s3 w t / 2) exp(-i [A s1 + (A0 - w/2) s3] t).
CMat2 rabi_one_spin_rotating(const RabiParams& rp, double t);

/// One-spin propagator from t0 to t1 for any FieldSpec alternative.
CMat2 one_spin_propagator(const FieldSpec& f, double t0, double t1);

/// exp(-i (Sigma.rho) phi / 2) = e^{i phi/2} [I cos phi - i A sin phi].
CMat4 exchange_rotation(double phi);

/// G = F = 0 with arbitrary J(t).
Propagator prop_free_interaction(const ScalarProfile& j, double t0, double t1);

/// J = 0: R = R(G,0,0) R(0,F,0) built from the one-spin factors.
Propagator prop_noninteracting(const FieldSpec& g, const FieldSpec& f, double t0, double t1);

/// Second form of the factorized solution, A R(0,G,0) A R(0,F,0).
CMat4 prop_noninteracting_swap_form(const FieldSpec& g, const FieldSpec& f, double t0, double t1);

/// G = F: R = R(0,0,J) R(G,0,0) R(0,G,0).
Propagator prop_equal_fields(const FieldSpec& g, const ScalarProfile& j, double t0, double t1);

/// Constant J = 2 gamma and parallel constant fields G = (0,0,a), F = (0,0,b).
/// Returns U(tau) for the elapsed time tau; t0 = 0, t1 = tau.
Propagator prop_constant_parallel(double gamma, double a, double b, double tau);

/// R_t(0,F,0) = I (x) u_F for the Rabi field on the second spin.
Propagator prop_rabi_second_spin(const RabiParams& rp, double t);

/// R_t(F,F,J) for both spins in the same Rabi field:
///   R_z(wt) exp[-i (Sigma.rho) w gamma(t)] R_rho(w_R t) R_Sigma(w_R t),
/// gamma(t) = (1/2w) * integral_{t0}^{t} J.  For t0 != 0 the operator is the
/// propagator from t0, obtained by conjugating with R_z(w t0).
Propagator prop_equal_rabi(const RabiParams& rp, const ScalarProfile& j, double t0, double t);

/// Literal R_Sigma(x) / R_rho(x) brackets; std::nullopt when the denominator degenerates.
std::optional<CMat4> rabi_bracket_sigma(const RabiParams& rp, double x);
std::optional<CMat4> rabi_bracket_rho(const RabiParams& rp, double x);

/// 5-point central-difference residual ||i dY/dt - H(t) Y||_max.
template <typename StateFn, typename HamFn>
double schrodinger_residual(const StateFn& state, const HamFn& ham, double t, double h = 1e-4) {
  const auto y = state(t);
  const decltype(y) dy = (state(t - 2.0 * h) - 8.0 * state(t - h) + 8.0 * state(t + h) - state(t + 2.0 * h)) /
                  (12.0 * h);
  return max_abs(kI * dy - ham(t) * y);
}

/// Monotone time map T with derivative.
struct TimeMap {
  std::function<double(double)> map;
  std::function<double(double)> rate;
};

/// Checks that Psi(T(t)) solves the problem with fields T'.G(T), T'.F(T),
/// T'.J(T).  Returns the Schroedinger residual of the reparameterized
/// trajectory at t.
double reparameterize_check(const TwoSpinProblem& p, const TimeMap& map, double t,
                            const IntegratorConfig& cfg = {});

}  // namespace twospin
