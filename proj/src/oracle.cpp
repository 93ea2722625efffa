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

#include "twospin/oracle.hpp"

#include "twospin/hamiltonian.hpp"

namespace twospin {

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "rel_tol must be positive");
  }
  if (!(min_step > 0.0) || !(min_step <= max_step)) {
    throw Error(ErrorKind::InvalidArgument, "require 0 < min_step <= max_step");
  }
}

OracleResult integrate_propagator(const TwoSpinProblem& p, double t0, double t1,
                                  const IntegratorConfig& cfg) {
  const auto ham = [&p](double t) { return two_spin_H(p, t).matrix; };
  const auto res = ode::rk4_adaptive(ham, CMat4(CMat4::Identity()), t0, t1, cfg);
  OracleResult out;
  out.report.steps = res.steps;
  out.report.step = res.steps > 0 ? std::abs(t1 - t0) / static_cast<double>(res.steps) : 0.0;
  out.report.refinement_diff = res.diff;
  out.report.raw_unitarity_defect = unitarity_defect(res.y);
  out.propagator = {polar_unitary(res.y), t0, t1, Method::Oracle};
  return out;
}

CVec4 integrate_state(const TwoSpinProblem& p, const CVec4& psi0, double t0, double t1,
                      const IntegratorConfig& cfg) {
  const auto ham = [&p](double t) { return two_spin_H(p, t).matrix; };
  CVec4 psi = ode::rk4_adaptive(ham, psi0, t0, t1, cfg).y;
  const double n = psi.norm();
  if (n > 0.0) {
    psi *= psi0.norm() / n;
  }
  return psi;
}

}  // namespace twospin
