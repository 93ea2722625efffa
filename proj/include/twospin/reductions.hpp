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

// Reductions of the two-spin problem to smaller ones:
//  * parallel fields G = (0,0,B1), F = (0,0,B2): v1 and v4 decouple into pure
//    phases and (v2, v3) obeys a one-spin equation in the field
//    K = (J, 0, B1 - B2);
//  * two Rabi fields sharing a drive frequency: in the frame rotating with
//    the drive the problem becomes time independent.

#include "twospin/model.hpp"
#include "twospin/numlin.hpp"

namespace twospin {

enum class ReductionCase {
  General,
  /// J constant: K = (eps, 0, B-(t)).
  ConstantInteraction,
  /// B1 - B2 = eps constant: M = (J(t), 0, eps).
  ConstantDifference,
  /// Both of the above: K constant.
  ConstantField,
};

/// psi' = (v2, v3) obeys i psi'' = [(sigma.K) - J/2] psi'; psi = exp(-i Phi/2) psi'
/// obeys the bare spin equation with field K.
enum class SpinorConvention { Primed, Unprimed };

struct ParallelReduction {
  ScalarProfile B1;
  ScalarProfile B2;
  ScalarProfile J;
  double t0 = 0.0;
  ReductionCase kind = ReductionCase::General;
  /// B1 - B2 when kind is ConstantDifference or ConstantField.
  double difference = 0.0;
  /// Grid step for the two-level integrator used when K is time dependent.
  double reduced_step = 1e-3;

  [[nodiscard]] double b_plus(double t) const { return B1.value_at(t) + B2.value_at(t); }
  [[nodiscard]] double b_minus(double t) const { return B1.value_at(t) - B2.value_at(t); }
  /// K(t) = (J, 0, B-).
  [[nodiscard]] Vec3 reduced_field(double t) const;
  /// exp(-i integral_{t0}^{t} (J/2 + B+)).
  [[nodiscard]] Complex v1_phase(double t) const;
  /// exp(-i integral_{t0}^{t} (J/2 - B+)).
  [[nodiscard]] Complex v4_phase(double t) const;
  /// Phi(t)/2, the accumulated phase that separates psi' from psi.
  [[nodiscard]] double phase_accumulator(double t) const;
  /// exp(i Phi(t)/2): psi' = phase_factor * psi.
  [[nodiscard]] Complex phase_factor(double t) const;
};

ParallelReduction reduce_parallel(const ScalarProfile& b1, const ScalarProfile& b2,
                                  const ScalarProfile& j, double t0 = 0.0);

/// Solution of the reduced two-level problem with psi(t0) = psi0.  Closed
/// form when K is constant; otherwise an anchored RK4 grid (the
/// constant-difference case integrates the field (eps, 0, J(t)) and maps
/// back with km_map).
CVec2 reduced_state(const ParallelReduction& red, const CVec2& psi0, double t,
                    SpinorConvention convention = SpinorConvention::Unprimed);

/// Four-spinor (v1, v2, v3, v4) at t from C1, C4 and psi(t0) = psi0.
CVec4 assemble_parallel(const ParallelReduction& red, Complex c1, Complex c4, const CVec2& psi0,
                        double t);

/// (sigma_1 + sigma_3) / sqrt(2).
CMat2 km_matrix();
/// Maps solutions in the field (eps, 0, f) to solutions in (f, 0, eps).  Involutive.
CVec2 km_map(const CVec2& phi);

/// Unitary r with r sigma_3 r^dagger = (sigma . n) for a unit vector n.
CMat2 rotation_to_axis(const Vec3& n);

/// Parallel fields along an arbitrary axis n: solve along z and rotate back
/// with r (x) r, which commutes with (Sigma.rho).
CVec4 assemble_parallel_along(const Vec3& n, const ParallelReduction& red, Complex c1, Complex c4,
                              const CVec2& psi0, double t);

/// Constant problem obtained in the frame rotating with two Rabi drives of a
/// shared frequency: gamma = J / 2w, a from F, b from G.
struct RotatingFrameProblem {
  double gamma = 0.0;
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  double omega = 1.0;
};

/// F acts on the second spin, G on the first.  Throws Error(ZeroDriveFrequency)
/// for omega == 0 and Error(InvalidArgument) if the drive frequencies differ.
RotatingFrameProblem rotating_frame_reduce(const RabiField& f, const RabiField& g, double j);

/// R_z(wt) = exp[-i (wt/2)(Sigma_3 + rho_3)].
CMat4 rotating_frame(double omega, double t);

/// Psi(t) = exp(-i lambda w t) R_z(wt) C.  Throws Error(NotAnEigenpair) when
/// ||D(lambda) C|| exceeds 1e-8 * scale.
CVec4 rotating_frame_solution(const RotatingFrameProblem& rf, double lambda, const CVec4& c, double t);

}  // namespace twospin
