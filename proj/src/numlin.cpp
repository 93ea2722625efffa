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

#include "twospin/numlin.hpp"

#include "twospin/errors.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace twospin {
namespace {

template <int N>
Eigen::Matrix<Complex, N, N> expm_hermitian(const Eigen::Matrix<Complex, N, N>& h, double t,
                                             double herm_tol) {
  const double defect = hermiticity_defect(h);
  if (!(defect <= herm_tol)) {
    std::ostringstream msg;
    msg << "generator is not Hermitian (defect " << defect << " > " << herm_tol << ")";
    throw Error(ErrorKind::NonHermitianInput, msg.str());
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Eigen::Matrix<Complex, N, N> sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, N, N>> solver(sym);
  Eigen::Matrix<Complex, N, 1> phases;
  for (int k = 0; k < N; ++k) {
    phases(k) = std::exp(-kI * solver.eigenvalues()(k) * t);
  }
  const auto& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

template <int N>
Eigen::Matrix<Complex, N, N> polar(const Eigen::Matrix<Complex, N, N>& m) {
  Eigen::JacobiSVD<Eigen::Matrix<Complex, N, N>> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

std::array<CMat2, 4> make_paulis() {
  std::array<CMat2, 4> s;
  s[0] = CMat2::Identity();
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -kI, kI, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

const std::array<CMat2, 4>& paulis() {
  static const std::array<CMat2, 4> s = make_paulis();
  return s;
}

}  // namespace

const CMat2& pauli(int i) { return paulis().at(static_cast<std::size_t>(i)); }

CMat4 kron(const CMat2& lhs, const CMat2& rhs) {
  CMat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = lhs(i, j) * rhs;
    }
  }
  return out;
}

const CMat4& Sigma(int i) {
  static const std::array<CMat4, 4> m = {kron(pauli(0), pauli(0)), kron(pauli(0), pauli(1)),
                                         kron(pauli(0), pauli(2)), kron(pauli(0), pauli(3))};
  return m.at(static_cast<std::size_t>(i));
}

const CMat4& rho(int i) {
  static const std::array<CMat4, 4> m = {kron(pauli(0), pauli(0)), kron(pauli(1), pauli(0)),
                                         kron(pauli(2), pauli(0)), kron(pauli(3), pauli(0))};
  return m.at(static_cast<std::size_t>(i));
}

const CMat4& sigma_dot_rho() {
  static const CMat4 m = kron(pauli(1), pauli(1)) + kron(pauli(2), pauli(2)) + kron(pauli(3), pauli(3));
  return m;
}

CMat4 swap_matrix() { return 0.5 * (CMat4::Identity() + sigma_dot_rho()); }

CMat2 sigma_dot(const Vec3& v) {
  CMat2 h;
  h << v(2), Complex(v(0), -v(1)), Complex(v(0), v(1)), -v(2);
  return h;
}

CMat4 Sigma_dot(const Vec3& v) { return kron(pauli(0), sigma_dot(v)); }

CMat4 rho_dot(const Vec3& v) { return kron(sigma_dot(v), pauli(0)); }

CMat4 expm_skew_hermitian(const CMat4& h, double t, double herm_tol) {
  return expm_hermitian<4>(h, t, herm_tol);
}

CMat2 expm_skew_hermitian(const CMat2& h, double t, double herm_tol) {
  return expm_hermitian<2>(h, t, herm_tol);
}

CMat4 polar_unitary(const CMat4& m) { return polar<4>(m); }
CMat2 polar_unitary(const CMat2& m) { return polar<2>(m); }

CVec4 theta(int mu) {
  if (mu < 1 || mu > 4) {
    throw Error(ErrorKind::InvalidArgument, "basis index must lie in 1..4");
  }
  CVec4 v = CVec4::Zero();
  v(mu - 1) = 1.0;
  return v;
}

}  // namespace twospin
