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
#include "twospin/model.hpp"

#include <doctest.h>

#include <numbers>

using namespace twospin;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::InvalidArgument;
}

// Composite trapezoid over many points; second-order reference.
double trapezoid(const ScalarProfile& p, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = 0.5 * (p.value_at(a) + p.value_at(b));
  for (int i = 1; i < n; ++i) {
    sum += p.value_at(a + i * h);
  }
  return sum * h;
}

}  // namespace

TEST_CASE("constant profile") {
  const auto p = ScalarProfile::constant(2.0);
  CHECK(p.is_constant());
  CHECK(p.value_at(-1e9) == 2.0);
  CHECK(interaction_integral(p, 0.0, std::numbers::pi) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(interaction_integral(p, 0.7, 0.7) == 0.0);
}

TEST_CASE("sampled profile validation") {
  CHECK(kind_of([] { (void)ScalarProfile::samples({{0.0, 1.0}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)ScalarProfile::samples({{0.0, 1.0}, {0.0, 2.0}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)ScalarProfile::samples({{1.0, 1.0}, {0.0, 2.0}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)ScalarProfile::samples({{0.0, NAN}, {1.0, 2.0}}); }) == ErrorKind::InvalidArgument);
  const auto p = ScalarProfile::samples({{0.0, 1.0}, {1.0, 2.0}});
  CHECK(kind_of([&] { (void)p.value_at(1.5); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([&] { (void)p.integral(0.0, 2.0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("sampled profile interpolation") {
  std::vector<Knot> knots{{0.0, 0.0}, {1.0, 1.0}, {2.0, 4.0}, {3.0, 2.0}};
  const auto lin = ScalarProfile::samples(knots, Interpolation::Linear);
  CHECK(lin.value_at(0.5) == doctest::Approx(0.5));
  CHECK(lin.value_at(2.25) == doctest::Approx(3.5));

  const auto cubic = ScalarProfile::samples(knots);
  for (const Knot& k : knots) {
    CHECK(cubic.value_at(k.t) == doctest::Approx(k.value).epsilon(1e-15));
  }
  // Monotone data stays within the knot values on each interval.
  for (double t = 0.0; t <= 3.0; t += 0.01) {
    const double v = cubic.value_at(t);
    CHECK(v >= -1e-15);
    CHECK(v <= 4.0 + 1e-15);
  }
}

TEST_CASE("profile integral") {
  // J(t) = t sampled densely.
  std::vector<Knot> ramp;
  for (int i = 0; i <= 20; ++i) {
    ramp.push_back({i / 20.0, i / 20.0});
  }
  const auto p = ScalarProfile::samples(ramp);
  CHECK(interaction_integral(p, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-8));

  const auto q = ScalarProfile::samples({{0.0, 0.3}, {0.7, -1.0}, {2.0, 0.5}, {3.5, 2.0}, {4.0, 1.0}});
  for (auto interp : {Interpolation::MonotoneCubic, Interpolation::Linear}) {
    const auto r = ScalarProfile::samples(q.knots(), interp);
    CHECK(r.integral(0.2, 3.9) == doctest::Approx(trapezoid(r, 0.2, 3.9, 200000)).epsilon(1e-9));
    CHECK(r.integral(3.9, 0.2) == doctest::Approx(-r.integral(0.2, 3.9)).epsilon(1e-15));
  }

  twospin::testing::Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    double t[3] = {rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 4)};
    CHECK(std::abs(q.integral(t[0], t[1]) + q.integral(t[1], t[2]) - q.integral(t[0], t[2])) < 1e-10);
  }
}

TEST_CASE("field_at") {
  const FieldSpec r = RabiField(1.0, 2.0, 3.0);
  CHECK(max_abs_diff(field_at(r, 0.0), Vec3(1, 0, 2)) == 0.0);
  CHECK(max_abs_diff(field_at(ZeroField{}, 4.0), Vec3::Zero()) == 0.0);
  const FieldSpec s = RabiField(1.0, 0.0, std::numbers::pi, std::numbers::pi / 2);
  CHECK(max_abs_diff(field_at(s, 0.0), Vec3(0, 1, 0)) < 1e-16);

  twospin::testing::Rng rng(3);
  const FieldSpec q = RabiField(0.7, -0.4, 1.3, 0.2);
  for (int k = 0; k < 100; ++k) {
    const Vec3 v = field_at(q, rng.uniform(-50, 50));
    CHECK(std::abs(std::hypot(v(0), v(1)) - 0.7) < 1e-12);
  }
  const FieldSpec pz = ParallelZField{ScalarProfile::samples({{0.0, 1.0}, {2.0, 3.0}}, Interpolation::Linear)};
  CHECK(max_abs_diff(field_at(pz, 1.0), Vec3(0, 0, 2)) < 1e-15);
  CHECK(kind_of([] { RabiField(1.0, 1.0, 0.0); }) == ErrorKind::ZeroDriveFrequency);
}

TEST_CASE("stationary basis") {
  const StationaryBasis b = stationary_basis();
  const CMat4 m = b.matrix();
  CHECK(max_abs_diff(m.adjoint() * m, CMat4::Identity()) < 1e-15);
  const double eig[] = {1.0, 1.0, -3.0, 1.0};
  for (int i = 1; i <= 4; ++i) {
    CHECK(max_abs_diff(sigma_dot_rho() * b[i], eig[i - 1] * b[i]) < 1e-15);
  }
  CHECK(max_abs_diff(b[1], theta(1)) == 0.0);
  CHECK(max_abs_diff(b[4], theta(4)) == 0.0);
}

TEST_CASE("problem equality") {
  TwoSpinProblem a;
  a.G = RabiField(0.2, 1.0, 2.0);
  TwoSpinProblem b = a;
  CHECK(a == b);
  b.J = ScalarProfile::constant(0.1);
  CHECK_FALSE(a == b);
}
