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

#include "twospin/hamiltonian.hpp"

namespace twospin {

CMat2 one_spin_h(const Vec3& f) { return sigma_dot(f); }

CMat4 two_spin_matrix(const Vec3& g, const Vec3& f, double j) {
  return rho_dot(g) + Sigma_dot(f) + (0.5 * j) * sigma_dot_rho();
}

CMat4 two_spin_matrix_entrywise(const Vec3& g, const Vec3& f, double j) {
  const Complex f_minus(f(0), -f(1));
  const Complex f_plus(f(0), f(1));
  const Complex g_minus(g(0), -g(1));
  const Complex g_plus(g(0), g(1));
  const double half = 0.5 * j;
  CMat4 h;
  // clang-format off
  h << f(2) + g(2) + half, f_minus,            g_minus,            0.0,
       f_plus,             g(2) - f(2) - half, j,                  g_minus,
       g_plus,             j,                  f(2) - g(2) - half, f_minus,
       0.0,                g_plus,             f_plus,             half - g(2) - f(2);
  // clang-format on
  return h;
}

HamiltonianSample two_spin_H(const TwoSpinProblem& p, double t) {
  return {two_spin_matrix(field_at(p.G, t), field_at(p.F, t), p.J.value_at(t)), t};
}

TwoSpinProblem swapped(const TwoSpinProblem& p) {
  TwoSpinProblem q = p;
  std::swap(q.G, q.F);
  return q;
}

double check_swap(const TwoSpinProblem& p, double t) {
  const CMat4 a = swap_matrix();
  return max_abs_diff(a * two_spin_H(p, t).matrix * a, two_spin_H(swapped(p), t).matrix);
}

}  // namespace twospin
