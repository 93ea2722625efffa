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

#include "support/reference.hpp"
#include "twospin/errors.hpp"
#include "twospin/hamiltonian.hpp"
#include "twospin/oracle.hpp"

#include <doctest.h>

using namespace twospin;
using twospin::testing::midpoint_propagator;
using twospin::testing::taylor_expm;

namespace {

TwoSpinProblem constant_problem() {
  TwoSpinProblem p;
  p.G = ConstantField{Vec3(0.3, -0.2, 0.5)};
  p.F = ConstantField{Vec3(-0.1, 0.4, 0.2)};
  p.J = ScalarProfile::constant(0.7);
  return p;
}

TwoSpinProblem driven_problem() {
  TwoSpinProblem p;
  p.G = RabiField(0.4, 0.9, 1.7, 0.3);
  p.F = ParallelZField{ScalarProfile::samples({{-1.0, 0.2}, {2.0, -0.5}, {5.0, 0.8}, {8.0, 0.1}})};
  p.J = ScalarProfile::samples({{-1.0, 0.5}, {3.0, 1.2}, {8.0, -0.4}});
  return p;
}

}  // namespace

TEST_CASE("zero Hamiltonian gives the identity") {
  const auto r = integrate_propagator(TwoSpinProblem{}, 0.0, 3.0);
  CHECK(max_abs_diff(r.propagator.matrix, CMat4::Identity()) == 0.0);
  CHECK(r.propagator.method == Method::Oracle);
  const CVec4 psi = integrate_state(TwoSpinProblem{}, theta(1), 0.0, 2.0);
  CHECK(max_abs_diff(psi, theta(1)) == 0.0);
}

TEST_CASE("constant Hamiltonian matches the exponential") {
  const TwoSpinProblem p = constant_problem();
  const CMat4 h = two_spin_H(p, 0.0).matrix;
  for (double t : {0.5, 3.0, 10.0, -2.0}) {
    const auto r = integrate_propagator(p, 0.0, t);
    CHECK(max_abs_diff(r.propagator.matrix, taylor_expm(h, t)) < 1e-10);
    CHECK(r.report.refinement_diff <= 1e-10);
    CHECK(r.report.raw_unitarity_defect < 1e-9);
  }
}

TEST_CASE("time-dependent problem matches an independent integrator") {
  const TwoSpinProblem p = driven_problem();
  const auto ham = [&p](double t) { return two_spin_H(p, t).matrix; };
  const CMat4 ref = midpoint_propagator(ham, 0.5, 6.0, 4000);
  CHECK(max_abs_diff(integrate_propagator(p, 0.5, 6.0).propagator.matrix, ref) < 1e-8);
}

TEST_CASE("state integration preserves norm and is linear") {
  const TwoSpinProblem p = driven_problem();
  twospin::testing::Rng rng(2);
  const CVec4 u = rng.state();
  const CVec4 v = rng.state();
  const Complex alpha(0.3, -0.8);
  const Complex beta(1.1, 0.2);
  IntegratorConfig cfg;
  const auto ham = [&p](double t) { return two_spin_H(p, t).matrix; };
  const auto raw = ode::rk4_adaptive(ham, u, 0.0, 7.0, cfg);
  CHECK(std::abs(raw.y.norm() - 1.0) < 1e-9);

  const CVec4 lhs = integrate_state(p, alpha * u + beta * v, 0.0, 7.0);
  const CVec4 rhs = alpha * integrate_state(p, u, 0.0, 7.0) + beta * integrate_state(p, v, 0.0, 7.0);
  CHECK(max_abs_diff(lhs, rhs) < 1e-9);
}

TEST_CASE("RK4 error ratio under step halving") {
  const TwoSpinProblem p = constant_problem();
  const CMat4 h = two_spin_H(p, 0.0).matrix;
  const auto ham = [&h](double) { return h; };
  const CMat4 exact = taylor_expm(h, 2.0);
  const CMat4 id = CMat4::Identity();
  for (long n : {20L, 40L, 80L}) {
    const double e1 = max_abs_diff(ode::rk4_fixed(ham, id, 0.0, 2.0, n), exact);
    const double e2 = max_abs_diff(ode::rk4_fixed(ham, id, 0.0, 2.0, 2 * n), exact);
    CHECK(e1 / e2 >= 12.0);
    CHECK(e1 / e2 <= 20.0);
  }
}

TEST_CASE("anchored grid reaches the end point exactly") {
  const CMat4 h = two_spin_H(constant_problem(), 0.0).matrix;
  const auto ham = [&h](double) { return h; };
  const CMat4 y = ode::rk4_anchored(ham, CMat4(CMat4::Identity()), 0.0, 1.2345, 1e-3);
  CHECK(max_abs_diff(y, taylor_expm(h, 1.2345)) < 1e-11);
}

TEST_CASE("configuration errors") {
  IntegratorConfig bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);

  IntegratorConfig tight;
  tight.rel_tol = 1e-16;
  tight.max_step = 0.1;
  tight.min_step = 0.05;
  try {
    (void)integrate_propagator(constant_problem(), 0.0, 5.0, tight);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("integration may end exactly at the end of a sampled span") {
  TwoSpinProblem p;
  p.F = ParallelZField{ScalarProfile::samples({{0.1, 0.2}, {3.0, -0.5}, {6.3, 0.8}})};
  p.J = ScalarProfile::samples({{0.1, 0.5}, {6.3, -0.4}});
  CHECK_NOTHROW((void)integrate_propagator(p, 0.1, 6.3));
  CHECK_NOTHROW((void)integrate_propagator(p, 6.3, 0.1));
  const auto ham = [&p](double t) { return two_spin_H(p, t).matrix; };
  CHECK_NOTHROW((void)ode::rk4_anchored(ham, CMat4(CMat4::Identity()), 0.1, 6.3, 0.7));
}
