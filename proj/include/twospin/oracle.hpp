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

// Independent numerical integrator for i dY/dt = H(t) Y.
//
// Classic RK4 on a uniform grid.  The adaptive driver doubles the number of
// steps until two successive refinements agree to rel_tol; the finer result
// is kept.  Re-unitarization happens only after that accuracy check and the
// raw defect is always reported.

#include "twospin/errors.hpp"
#include "twospin/model.hpp"
#include "twospin/numlin.hpp"
#include "twospin/propagator.hpp"

#include <cmath>
#include <sstream>

namespace twospin {

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double max_step = 1e-2;
  double min_step = 1e-7;

  void validate() const;
};

struct OracleReport {
  long steps = 0;
  double step = 0.0;
  double refinement_diff = 0.0;
  /// Unitarity defect of the integrated matrix before re-unitarization.
  double raw_unitarity_defect = 0.0;
};

struct OracleResult {
  Propagator propagator;
  OracleReport report;
};

OracleResult integrate_propagator(const TwoSpinProblem& p, double t0, double t1,
                                  const IntegratorConfig& cfg = {});

CVec4 integrate_state(const TwoSpinProblem& p, const CVec4& psi0, double t0, double t1,
                      const IntegratorConfig& cfg = {});

namespace ode {

/// One classical RK4 step from t to t_next; H is sampled only inside [t, t_next].
template <typename Ham, typename Y>
Y rk4_step(const Ham& h, const Y& y, double t, double t_next) {
  const Complex mi = -kI;
  const double dt = t_next - t;
  const auto hm = h(t + 0.5 * dt);
  const Y k1 = mi * (h(t) * y);
  const Y k2 = mi * (hm * (y + (0.5 * dt) * k1));
  const Y k3 = mi * (hm * (y + (0.5 * dt) * k2));
  const Y k4 = mi * (h(t_next) * (y + dt * k3));
  return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

template <typename Ham, typename Y>
Y rk4_fixed(const Ham& h, Y y, double t0, double t1, long steps) {
  const double dt = (t1 - t0) / static_cast<double>(steps);
  double t = t0;
  for (long k = 1; k <= steps; ++k) {
    const double next = k == steps ? t1 : t0 + static_cast<double>(k) * dt;
    y = rk4_step(h, y, t, next);
    t = next;
  }
  return y;
}

/// Steps of exactly `step` anchored at t0, then one partial step to t1.  The
/// result depends smoothly on t1, which keeps finite-difference residuals of
/// the integrated trajectory meaningful.
template <typename Ham, typename Y>
Y rk4_anchored(const Ham& h, Y y, double t0, double t1, double step) {
  const double span = t1 - t0;
  if (span == 0.0) {
    return y;
  }
  const double dt = std::copysign(step, span);
  const auto full = static_cast<long>(std::floor(std::abs(span) / step));
  double t = t0;
  for (long k = 1; k <= full; ++k) {
    double next = t0 + static_cast<double>(k) * dt;
    if ((next - t1) * dt > 0.0) {
      next = t1;
    }
    y = rk4_step(h, y, t, next);
    t = next;
  }
  if (t != t1) {
    y = rk4_step(h, y, t, t1);
  }
  return y;
}

template <typename Y>
struct AdaptiveResult {
  Y y;
  long steps = 0;
  double diff = 0.0;
};

template <typename Ham, typename Y>
AdaptiveResult<Y> rk4_adaptive(const Ham& h, const Y& y0, double t0, double t1,
                               const IntegratorConfig& cfg) {
  cfg.validate();
  const double span = std::abs(t1 - t0);
  if (span == 0.0) {
    return {y0, 0, 0.0};
  }
  long steps = std::max<long>(1, static_cast<long>(std::ceil(span / cfg.max_step)));
  Y coarse = rk4_fixed(h, y0, t0, t1, steps);
  for (;;) {
    steps *= 2;
    if (span / static_cast<double>(steps) < cfg.min_step) {
      std::ostringstream msg;
      msg << "RK4 refinement reached min_step " << cfg.min_step << " without meeting rel_tol "
          << cfg.rel_tol;
      throw Error(ErrorKind::NoConvergence, msg.str());
    }
    Y fine = rk4_fixed(h, y0, t0, t1, steps);
    const double diff = max_abs(fine - coarse);
    if (diff <= cfg.rel_tol * std::max(1.0, max_abs(fine))) {
      return {std::move(fine), steps, diff};
    }
    coarse = std::move(fine);
  }
}

}  // namespace ode

}  // namespace twospin
