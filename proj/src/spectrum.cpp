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

#include "twospin/spectrum.hpp"

#include "twospin/model.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace twospin {
namespace {

constexpr double kGroupingGap = 1e-3;
constexpr double kMultiplicityGap = 1e-7;

using Poly = std::vector<double>;

Poly poly_mul(const Poly& x, const Poly& y) {
  Poly out(x.size() + y.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

Poly poly_add(Poly x, const Poly& y) {
  if (y.size() > x.size()) {
    x.resize(y.size(), 0.0);
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    x[i] += y[i];
  }
  return x;
}

}  // namespace

double Quartic::operator()(double lambda) const {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * lambda + *it;
  }
  return acc;
}

double Quartic::derivative(double lambda) const {
  double acc = 0.0;
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    acc = acc * lambda + static_cast<double>(k) * c[k];
  }
  return acc;
}

CMat4 level_matrix(double gamma, const Vec3& a, const Vec3& b) {
  return gamma * sigma_dot_rho() + Sigma_dot(a) + rho_dot(b);
}

CMat4 build_D(double gamma, const Vec3& a, const Vec3& b, double lambda) {
  return level_matrix(gamma, a, b) - lambda * CMat4::Identity();
}

Quartic quartic_d(double gamma, const Vec3& a, const Vec3& b) {
  const double a2 = a.squaredNorm();
  const double b2 = b.squaredNorm();
  const double ab = a.dot(b);
  const double g2 = gamma * gamma;
  Quartic q;
  q.c[4] = 1.0;
  q.c[3] = 0.0;
  q.c[2] = -2.0 * (a2 + b2 + 3.0 * g2);
  q.c[1] = 8.0 * gamma * (g2 - ab);
  q.c[0] = -3.0 * g2 * g2 + 2.0 * g2 * (a2 + b2 + 4.0 * ab) + (a2 - b2) * (a2 - b2);
  return q;
}

double quartic_d_shifted(double gamma, const Vec3& a, const Vec3& b, double lambda) {
  const double a2 = a.squaredNorm();
  const double b2 = b.squaredNorm();
  const double lm = lambda - gamma;
  return lm * lm * lm * (lambda + 3.0 * gamma) - 2.0 * (lambda * lambda - gamma * gamma) * (a2 + b2) -
         8.0 * gamma * a.dot(b) * lm + (a2 - b2) * (a2 - b2);
}

double quartic_d_factored(double gamma, const Vec3& a, const Vec3& b, double lambda) {
  const Vec3 p = a + b;
  const Vec3 q = a - b;
  const double lp = lambda + gamma;
  const double lm = lambda - gamma;
  const double pq = p.dot(q);
  return (lp * lp - 4.0 * gamma * gamma - q.squaredNorm()) * (lm * lm - p.squaredNorm()) -
         p.squaredNorm() * q.squaredNorm() + pq * pq;
}

Quartic quartic_d_factored_coefficients(double gamma, const Vec3& a, const Vec3& b) {
  const Vec3 p = a + b;
  const Vec3 q = a - b;
  const double p2 = p.squaredNorm();
  const double q2 = q.squaredNorm();
  const double pq = p.dot(q);
  // (l + g)^2 - 4 g^2 - q^2 and (l - g)^2 - p^2, lowest degree first.
  const Poly first = {gamma * gamma - 4.0 * gamma * gamma - q2, 2.0 * gamma, 1.0};
  const Poly second = {gamma * gamma - p2, -2.0 * gamma, 1.0};
  const Poly prod = poly_add(poly_mul(first, second), Poly{-p2 * q2 + pq * pq});
  Quartic out;
  for (std::size_t k = 0; k < prod.size() && k < out.c.size(); ++k) {
    out.c[k] = prod[k];
  }
  return out;
}

CVec4 fix_phase(const CVec4& v) {
  for (int i = 0; i < 4; ++i) {
    const double m = std::abs(v(i));
    if (m > 1e-10) {
      return v * (std::conj(v(i)) / m);
    }
  }
  return v;
}

SpectralResult solve_levels(double gamma, const Vec3& a, const Vec3& b) {
  SpectralResult out;
  out.scale = std::max({std::abs(gamma), a.norm(), b.norm(), 1.0});
  out.quartic = quartic_d(gamma, a, b);
  const double s = out.scale;
  const CMat4 m = level_matrix(gamma, a, b);

  // Companion matrix of the monic polynomial in mu = lambda / scale.
  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  for (int k = 0; k < 4; ++k) {
    companion(k, 3) = -out.quartic.c[static_cast<std::size_t>(k)] / std::pow(s, 4 - k);
  }
  companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> eig(companion, false);
  std::vector<double> est(4);
  for (int k = 0; k < 4; ++k) {
    est[static_cast<std::size_t>(k)] = eig.eigenvalues()(k).real() * s;
  }

  for (double& r : est) {
    const double dp = out.quartic.derivative(r);
    if (dp != 0.0) {
      const double next = r - out.quartic(r) / dp;
      if (std::isfinite(next) && std::abs(out.quartic(next)) < std::abs(out.quartic(r))) {
        r = next;
      }
    }
  }
  std::sort(est.begin(), est.end());

  // Group estimates whose spread reflects an (almost) repeated root, then
  // take the Ritz pairs of M on the near-null right-singular subspace of
  // D(mean).  Hermitian M makes this exact for any exactly degenerate root.
  std::vector<std::pair<double, CVec4>> pairs;
  std::size_t start = 0;
  while (start < est.size()) {
    std::size_t end = start + 1;
    while (end < est.size() && est[end] - est[end - 1] < kGroupingGap * s) {
      ++end;
    }
    const auto count = static_cast<int>(end - start);
    const double mean = std::accumulate(est.begin() + static_cast<long>(start),
                                        est.begin() + static_cast<long>(end), 0.0) /
                        count;
    Eigen::JacobiSVD<CMat4> svd(build_D(gamma, a, b, mean), Eigen::ComputeFullV);
    const Eigen::Matrix<Complex, 4, Eigen::Dynamic> basis = svd.matrixV().rightCols(count);
    const Eigen::MatrixXcd ritz = basis.adjoint() * m * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> small(0.5 * (ritz + ritz.adjoint()));
    for (int k = 0; k < count; ++k) {
      CVec4 v = basis * small.eigenvectors().col(k);
      v.normalize();
      pairs.emplace_back(small.eigenvalues()(k), v);
    }
    start = end;
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  for (std::size_t i = 0; i < 4; ++i) {
    out.roots[i] = pairs[i].first;
    out.vectors[i] = fix_phase(pairs[i].second);
    out.poly_residuals[i] = std::abs(out.quartic(out.roots[i]));
    out.vector_residuals[i] = (build_D(gamma, a, b, out.roots[i]) * out.vectors[i]).norm();
  }
  for (std::size_t i = 0; i < 4; ++i) {
    int mult = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (std::abs(out.roots[k] - out.roots[i]) < kMultiplicityGap * s) {
        ++mult;
      }
    }
    out.multiplicity[i] = mult;
  }
  return out;
}

std::array<StationaryLevel, 4> stationary_rabi(double J, double A0) {
  const StationaryBasis basis = stationary_basis();
  return {StationaryLevel{0.5 * J + 2.0 * A0, basis[1]}, StationaryLevel{0.5 * J, basis[2]},
          StationaryLevel{-1.5 * J, basis[3]}, StationaryLevel{0.5 * J - 2.0 * A0, basis[4]}};
}

}  // namespace twospin
