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

// Dense 2x2 / 4x4 complex linear algebra for the two-spin problem.
//
// Basis convention: the four-level basis is Theta_1..Theta_4 =
// up(x)up, up(x)down, down(x)up, down(x)down.  In kron(lhs, rhs) the left
// factor acts on the first spin (the "rho" side) and the right factor on the
// second spin (the "Sigma" side).

#include <Eigen/Dense>

#include <complex>

namespace twospin {

using Complex = std::complex<double>;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;
using CVec2 = Eigen::Vector2cd;
using CVec4 = Eigen::Vector4cd;
using Vec3 = Eigen::Vector3d;

inline constexpr Complex kI{0.0, 1.0};

namespace tol {
inline constexpr double kAlgebraic = 1e-12;
inline constexpr double kHermiticity = 1e-10;
}  // namespace tol

/// Pauli matrix sigma_i for i = 1, 2, 3; i = 0 yields the 2x2 identity.
const CMat2& pauli(int i);

/// Sigma_i = I (x) sigma_i, acting on the second spin.
const CMat4& Sigma(int i);
/// rho_i = sigma_i (x) I, acting on the first spin.
const CMat4& rho(int i);
/// (Sigma . rho) = sum_i sigma_i (x) sigma_i.
const CMat4& sigma_dot_rho();

CMat4 kron(const CMat2& lhs, const CMat2& rhs);

/// The spin-exchange permutation (I + Sigma.rho) / 2.
CMat4 swap_matrix();

CMat2 sigma_dot(const Vec3& v);
CMat4 Sigma_dot(const Vec3& v);
CMat4 rho_dot(const Vec3& v);

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return max_abs(a - b);
}

/// ||U^dagger U - I||_max.
template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  return max_abs(u.adjoint() * u - Plain::Identity(u.rows(), u.cols()));
}

/// ||H - H^dagger||_max.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& h) {
  return max_abs(h - h.adjoint());
}

/// exp(-i H t) for Hermitian H via eigendecomposition.
/// Throws Error(NonHermitianInput) when the Hermiticity defect exceeds herm_tol.
CMat4 expm_skew_hermitian(const CMat4& h, double t, double herm_tol = tol::kHermiticity);
CMat2 expm_skew_hermitian(const CMat2& h, double t, double herm_tol = tol::kHermiticity);

/// Closest unitary matrix in Frobenius norm (unitary factor of the polar decomposition).
CMat4 polar_unitary(const CMat4& m);
CMat2 polar_unitary(const CMat2& m);

/// Basis vector Theta_mu, mu = 1..4.
CVec4 theta(int mu);

}  // namespace twospin
