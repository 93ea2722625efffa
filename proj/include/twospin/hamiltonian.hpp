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

#include "twospin/model.hpp"
#include "twospin/numlin.hpp"

namespace twospin {

/// One-spin Hamiltonian (sigma . F).
CMat2 one_spin_h(const Vec3& f);

/// (rho . G) + (Sigma . F) + (J/2)(Sigma . rho).
CMat4 two_spin_matrix(const Vec3& g, const Vec3& f, double j);

/// The same matrix written out entry by entry in the Theta basis.  Kept as an
/// independent construction to pin the basis ordering.
CMat4 two_spin_matrix_entrywise(const Vec3& g, const Vec3& f, double j);

struct HamiltonianSample {
  CMat4 matrix;
  double t = 0.0;
};

HamiltonianSample two_spin_H(const TwoSpinProblem& p, double t);

/// Problem with the two fields exchanged.
TwoSpinProblem swapped(const TwoSpinProblem& p);

/// ||A H(G,F,J) A - H(F,G,J)||_max at time t.
double check_swap(const TwoSpinProblem& p, double t);

}  // namespace twospin
