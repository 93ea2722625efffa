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
#include "twospin/hamiltonian.hpp"
#include "twospin/spectrum.hpp"

#include <doctest.h>

using namespace twospin;
using twospin::testing::leibniz_det;
using twospin::testing::Rng;

namespace {

// Coefficients of det D(lambda) by interpolating the Leibniz determinant at five nodes.
std::array<double, 5> determinant_coefficients(double g, const Vec3& a, const Vec3& b) {
  Eigen::Matrix<double, 5, 5> v;
  Eigen::Matrix<double, 5, 1> y;
  for (int i = 0; i < 5; ++i) {
    const double x = i - 2.0;
    for (int k = 0; k < 5; ++k) {
      v(i, k) = std::pow(x, k);
    }
    y(i) = leibniz_det(build_D(g, a, b, x)).real();
  }
  const Eigen::Matrix<double, 5, 1> c = v.fullPivLu().solve(y);
  return {c(0), c(1), c(2), c(3), c(4)};
}

}  // namespace

TEST_CASE("D matrix") {
  CHECK(max_abs(build_D(0.0, Vec3::Zero(), Vec3::Zero(), 0.0)) == 0.0);
  const Vec3 a(0.1, 0.2, 0.3);
  const Vec3 b(-0.4, 0.5, 0.6);
  // a couples to the second spin, b to the first.
  CHECK(max_abs_diff(level_matrix(0.7, a, b), two_spin_matrix(b, a, 1.4)) < 1e-15);
  CHECK(max_abs_diff(build_D(0.7, a, b, 0.3), level_matrix(0.7, a, b) - 0.3 * CMat4::Identity()) < 1e-15);
}

TEST_CASE("quartic coefficients") {
  const Quartic zero = quartic_d(0.0, Vec3::Zero(), Vec3::Zero());
  CHECK(zero.c == std::array<double, 5>{0, 0, 0, 0, 1});

  // (l - 1)^3 (l + 3) = l^4 - 6 l^2 + 8 l - 3.
  const Quartic singlet = quartic_d(1.0, Vec3::Zero(), Vec3::Zero());
  const std::array<double, 5> expected{-3, 8, -6, 0, 1};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(singlet.c[i] == doctest::Approx(expected[i]).epsilon(1e-15));
  }

  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const double g = rng.uniform(-2, 2);
    const Vec3 a = rng.vec(2.0);
    const Vec3 b = rng.vec(2.0);
    const Quartic q = quartic_d(g, a, b);
    const Quartic f = quartic_d_factored_coefficients(g, a, b);
    const auto det = determinant_coefficients(g, a, b);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(std::abs(q.c[i] - det[i]) < 1e-9);
      CHECK(std::abs(q.c[i] - f.c[i]) < 1e-9);
    }
    const double lambda = rng.uniform(-4, 4);
    CHECK(std::abs(q(lambda) - quartic_d_shifted(g, a, b, lambda)) < 1e-9);
    CHECK(std::abs(q(lambda) - quartic_d_factored(g, a, b, lambda)) < 1e-9);
    CHECK(std::abs(q(lambda) - leibniz_det(build_D(g, a, b, lambda)).real()) < 1e-9);
  }
}

TEST_CASE("quartic is symmetric in a and b") {
  Rng rng(14);
  for (int k = 0; k < 20; ++k) {
    const double g = rng.uniform(-2, 2);
    const Vec3 a = rng.vec(2.0);
    const Vec3 b = rng.vec(2.0);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(std::abs(quartic_d(g, a, b).c[i] - quartic_d(g, b, a).c[i]) < 1e-12);
    }
  }
}

TEST_CASE("solve_levels special cases") {
  const auto singlet = solve_levels(1.0, Vec3::Zero(), Vec3::Zero());
  const std::array<double, 4> r1{-3, 1, 1, 1};
  const auto rabi = solve_levels(1.0, Vec3(0, 0, 1), Vec3(0, 0, 1));
  const std::array<double, 4> r2{-3, -1, 1, 3};
  const auto zero = solve_levels(0.0, Vec3::Zero(), Vec3::Zero());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(singlet.roots[i] - r1[i]) < 1e-10);
    CHECK(std::abs(rabi.roots[i] - r2[i]) < 1e-10);
    CHECK(std::abs(zero.roots[i]) < 1e-10);
  }
  CHECK(singlet.multiplicity == std::array<int, 4>{1, 3, 3, 3});
  CHECK(zero.multiplicity == std::array<int, 4>{4, 4, 4, 4});
  // Degenerate eigenvectors still form an orthonormal set.
  CMat4 c;
  for (int i = 0; i < 4; ++i) {
    c.col(i) = singlet.vectors[static_cast<std::size_t>(i)];
  }
  CHECK(max_abs_diff(c.adjoint() * c, CMat4::Identity()) < 1e-12);
}

TEST_CASE("solve_levels on random inputs") {
  Rng rng(15);
  for (int k = 0; k < 300; ++k) {
    const double g = rng.uniform(-3, 3);
    const Vec3 a = rng.vec(3.0);
    const Vec3 b = k % 5 == 0 ? a : rng.vec(3.0);
    const SpectralResult r = solve_levels(g, a, b);
    const Eigen::SelfAdjointEigenSolver<CMat4> dense(level_matrix(g, a, b));
    const double s4 = std::pow(r.scale, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(std::abs(r.roots[i] - dense.eigenvalues()(static_cast<Eigen::Index>(i))) < 1e-9);
      CHECK(std::abs(r.quartic(r.roots[i])) < 1e-9 * s4);
      CHECK((build_D(g, a, b, r.roots[i]) * r.vectors[i]).norm() < 1e-9);
      CHECK(std::abs(r.vectors[i].norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("stationary Rabi levels") {
  const auto levels = stationary_rabi(2.0, 1.0);
  const std::array<double, 4> expected{3, 1, -3, -1};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(levels[i].lambda == doctest::Approx(expected[i]));
  }
  const auto free = stationary_rabi(0.0, 0.7);
  CHECK(free[0].lambda == doctest::Approx(1.4));
  CHECK(free[1].lambda == 0.0);
  CHECK(free[2].lambda == 0.0);
  CHECK(free[3].lambda == doctest::Approx(-1.4));

  Rng rng(16);
  for (int k = 0; k < 20; ++k) {
    const double J = rng.uniform(-2, 2);
    const double A0 = rng.uniform(-2, 2);
    const CMat4 h = two_spin_matrix(Vec3(0, 0, A0), Vec3(0, 0, A0), J);
    for (const auto& level : stationary_rabi(J, A0)) {
      CHECK(max_abs_diff(h * level.state, level.lambda * level.state) < 1e-12);
    }
  }
}

TEST_CASE("phase convention") {
  CVec4 v(0.0, Complex(0.0, 0.6), Complex(0.8, 0.0), 0.0);
  const CVec4 f = fix_phase(v);
  CHECK(f(1).imag() == 0.0);
  CHECK(f(1).real() > 0.0);
  CHECK(std::abs(f.norm() - 1.0) < 1e-15);
}
