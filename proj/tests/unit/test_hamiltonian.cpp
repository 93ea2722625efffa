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

#include <doctest.h>

using namespace twospin;

TEST_CASE("one_spin_h") {
  CMat2 d = CMat2::Zero();
  d.diagonal() << 0.4, -0.4;
  CHECK(max_abs_diff(one_spin_h(Vec3(0, 0, 0.4)), d) == 0.0);
  CHECK(max_abs_diff(one_spin_h(Vec3(1, 0, 0)), pauli(1)) == 0.0);
  CHECK(max_abs_diff(one_spin_h(Vec3(0, 1, 0)), pauli(2)) == 0.0);
}

TEST_CASE("two_spin_H examples") {
  TwoSpinProblem p;
  p.J = ScalarProfile::constant(2.0);
  CMat4 expected = CMat4::Zero();
  expected.diagonal() << 1.0, -1.0, -1.0, 1.0;
  expected(1, 2) = expected(2, 1) = 2.0;
  CHECK(max_abs_diff(two_spin_H(p, 0.3).matrix, expected) == 0.0);

  TwoSpinProblem q;
  q.F = ConstantField{Vec3(0, 0, 1)};
  CMat4 e2 = CMat4::Zero();
  e2.diagonal() << 1.0, -1.0, 1.0, -1.0;
  CHECK(max_abs_diff(two_spin_H(q, 0.0).matrix, e2) == 0.0);

  CHECK(max_abs(two_spin_H(TwoSpinProblem{}, 1.0).matrix) == 0.0);
}

TEST_CASE("operator and entrywise forms agree and are Hermitian") {
  twospin::testing::Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const Vec3 g = rng.vec(2.0);
    const Vec3 f = rng.vec(2.0);
    const double j = rng.uniform(-2, 2);
    // Independent construction from explicit Kronecker products.
    CMat4 h = CMat4::Zero();
    for (int i = 1; i <= 3; ++i) {
      h += g(i - 1) * kron(pauli(i), CMat2::Identity()) + f(i - 1) * kron(CMat2::Identity(), pauli(i)) +
           0.5 * j * kron(pauli(i), pauli(i));
    }
    CHECK(max_abs_diff(two_spin_matrix(g, f, j), h) < 1e-15);
    CHECK(max_abs_diff(two_spin_matrix_entrywise(g, f, j), h) < 1e-15);
    CHECK(hermiticity_defect(h) == 0.0);
  }
}

TEST_CASE("swap symmetry of the Hamiltonian") {
  twospin::testing::Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    TwoSpinProblem p;
    p.G = RabiField(rng.uniform(0, 1), rng.uniform(-1, 1), rng.uniform(0.2, 3), rng.uniform(-3, 3));
    p.F = ConstantField{rng.vec(1.5)};
    p.J = ScalarProfile::constant(rng.uniform(-2, 2));
    const double t = rng.uniform(-10, 10);
    CHECK(check_swap(p, t) < 1e-13);
    const CMat4 a = swap_matrix();
    CHECK(max_abs_diff(a * two_spin_H(p, t).matrix * a, two_spin_H(swapped(p), t).matrix) < 1e-13);
  }
  TwoSpinProblem same;
  same.G = same.F = RabiField(0.3, 1.0, 2.0);
  CHECK(check_swap(same, 0.4) < 1e-15);
  CHECK(max_abs_diff(two_spin_H(same, 0.4).matrix, two_spin_H(swapped(same), 0.4).matrix) == 0.0);
}
