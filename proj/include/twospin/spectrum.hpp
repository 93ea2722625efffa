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

// Stationary states for constant exchange and constant fields:
//   D(lambda) = gamma (Sigma.rho) + (Sigma.a) + (rho.b) - lambda I,
//   d(lambda) = det D(lambda).

#include "twospin/numlin.hpp"

#include <array>

namespace twospin {

/// Real polynomial sum_k c[k] lambda^k, degree <= 4.
struct Quartic {
  std::array<double, 5> c{};

  [[nodiscard]] double operator()(double lambda) const;
  [[nodiscard]] double derivative(double lambda) const;
};

/// gamma (Sigma.rho) + (Sigma.a) + (rho.b).
CMat4 level_matrix(double gamma, const Vec3& a, const Vec3& b);

CMat4 build_D(double gamma, const Vec3& a, const Vec3& b, double lambda);

/// Expanded coefficients
///   l^4 - 2 l^2 (a^2 + b^2 + 3 g^2) + 8 l g [g^2 - (ab)] - 3 g^4
///   + 2 g^2 [a^2 + b^2 + 4 (ab)] + (a^2 - b^2)^2.
Quartic quartic_d(double gamma, const Vec3& a, const Vec3& b);

/// (l - g)^3 (l + 3g) - 2 (l^2 - g^2)(a^2 + b^2) - 8 g (ab)(l - g) + (a^2 - b^2)^2.
double quartic_d_shifted(double gamma, const Vec3& a, const Vec3& b, double lambda);

/// [(l + g)^2 - 4 g^2 - q^2][(l - g)^2 - p^2] - p^2 q^2 + (pq)^2,  p = a + b, q = a - b.
double quartic_d_factored(double gamma, const Vec3& a, const Vec3& b, double lambda);

/// Coefficients of the factored form, expanded by polynomial multiplication.
Quartic quartic_d_factored_coefficients(double gamma, const Vec3& a, const Vec3& b);

struct SpectralResult {
  /// Ascending, repeated according to multiplicity.
  std::array<double, 4> roots{};
  /// Unit eigenvectors; first non-negligible component real and positive.
  std::array<CVec4, 4> vectors;
  std::array<int, 4> multiplicity{};
  Quartic quartic;
  /// |d(lambda_i)|.
  std::array<double, 4> poly_residuals{};
  /// ||D(lambda_i) C_i||.
  std::array<double, 4> vector_residuals{};
  /// max(|gamma|, |a|, |b|, 1).
  double scale = 1.0;
};

/// Roots of d via the companion matrix, one guarded Newton step each, then
/// Rayleigh-Ritz on the near-singular subspace of D for each root cluster.
SpectralResult solve_levels(double gamma, const Vec3& a, const Vec3& b);

struct StationaryLevel {
  double lambda = 0.0;
  CVec4 state;
};

/// Levels for G = F = (0, 0, A0) and exchange J.
std::array<StationaryLevel, 4> stationary_rabi(double J, double A0);

/// Multiply by a phase so the first component with modulus > 1e-10 is real positive.
CVec4 fix_phase(const CVec4& v);

}  // namespace twospin
