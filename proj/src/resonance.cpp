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

#include "twospin/resonance.hpp"

#include "twospin/errors.hpp"
#include "twospin/model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace twospin {
namespace {

constexpr double kAgreement = 1e-6;

// Fraction of the population that can be transferred: a'^2 / (a'^2 + a0^2).
double transfer_fraction(const RabiParams& rp) {
  if (rp.omega_R == 0.0) {
    return 0.0;
  }
  return (rp.A * rp.A) / (rp.omega_R * rp.omega_R);
}

// Maximum of 2x(1-x) for x = c s, s in [0, 1]; returns (value, s at max).
std::pair<double, double> max_mixed(double c) {
  if (c >= 0.5) {
    return {0.5, 0.5 / c};
  }
  return {2.0 * c * (1.0 - c), 1.0};
}

struct Probabilities {
  double p14, p21, p24, leak;
};

Probabilities probabilities_at(const RabiParams& rp, const ScalarProfile& j, const CMat4& basis,
                               double t) {
  const CMat4 e = basis.adjoint() * prop_equal_rabi(rp, j, 0.0, t).matrix * basis;
  double leak = 0.0;
  for (int k : {0, 1, 3}) {
    leak = std::max({leak, std::norm(e(2, k)), std::norm(e(k, 2))});
  }
  return {std::norm(e(3, 0)), std::norm(e(1, 0)), std::norm(e(1, 3)), leak};
}

template <typename F>
double golden_max(const F& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return std::max({f1, f2, f(lo), f(hi)});
}

}  // namespace

double rabi_probability(const RabiParams& rp, double t) {
  const double k2 = rp.ratio() * rp.ratio();
  if (k2 == 0.0) {
    return 0.0;
  }
  const double s = std::sin(rp.omega_R * t);
  return (k2 - rp.a0 * rp.a0) / k2 * s * s;
}

TwoSpinElements two_spin_elements(const RabiParams& rp, double J, double t) {
  const CMat4 basis = stationary_basis().matrix();
  const ScalarProfile j = ScalarProfile::constant(J);
  TwoSpinElements out;
  out.direct = basis.adjoint() * prop_equal_rabi(rp, j, 0.0, t).matrix * basis;

  CMat2 u;
  try {
    u = rabi_one_spin(rp, t);
  } catch (const Error&) {
    u = rabi_one_spin_rotating(rp, t);
  }
  // w gamma(t) = (1/2) integral_0^t J.
  const Complex phase = std::exp(-kI * (0.5 * J * t));
  const double root2 = std::sqrt(2.0);
  out.psi4_psi1 = phase * u(1, 0) * u(1, 0);
  out.psi2_psi1 = root2 * phase * u(0, 0) * u(1, 0);
  out.psi2_psi4 = root2 * phase * u(0, 1) * u(1, 1);
  out.formula_defect = std::max({std::abs(out.direct(3, 0) - out.psi4_psi1),
                                 std::abs(out.direct(1, 0) - out.psi2_psi1),
                                 std::abs(out.direct(1, 3) - out.psi2_psi4)});
  return out;
}

ResonancePair resonance_frequencies(double A, double A0) {
  ResonancePair r;
  r.omega1 = 2.0 * A0;
  r.omega2 = 2.0 * (A0 - A);
  r.omega2_degenerate = std::abs(r.omega2) < 1e-12;
  r.omega2_physical = r.omega2 > 0.0 && !r.omega2_degenerate;
  return r;
}

ScanRow scan_row(double A, double A0, double J, double omega, const ScanOptions& options) {
  const RabiParams rp = RabiParams::make(A, A0, omega);
  ScanRow row;
  row.omega = omega;

  const double c = transfer_fraction(rp);
  const double quarter = rp.omega_R > 0.0 ? 0.5 * std::numbers::pi / rp.omega_R : 0.0;
  row.p14_max = c * c;
  row.t14 = quarter;
  const auto [mixed, s_star] = max_mixed(c);
  row.p21_max = row.p24_max = mixed;
  row.t21 = row.t24 = rp.omega_R > 0.0 ? std::asin(std::sqrt(s_star)) / rp.omega_R : 0.0;

  double horizon = options.t_horizon;
  if (!(horizon > 0.0)) {
    horizon = rp.omega_R > 0.0 ? 4.0 * std::numbers::pi / rp.omega_R
                               : 4.0 * std::numbers::pi / std::abs(omega);
  }
  const int n = std::max(options.t_samples, 3);
  const CMat4 basis = stationary_basis().matrix();
  const ScalarProfile j = ScalarProfile::constant(J);
  const double dt = horizon / static_cast<double>(n - 1);

  std::array<double, 3> best{};
  std::array<int, 3> arg{};
  for (int i = 0; i < n; ++i) {
    const Probabilities p = probabilities_at(rp, j, basis, static_cast<double>(i) * dt);
    const std::array<double, 3> v{p.p14, p.p21, p.p24};
    for (std::size_t q = 0; q < 3; ++q) {
      if (v[q] > best[q]) {
        best[q] = v[q];
        arg[q] = i;
      }
    }
    row.p3_leak = std::max(row.p3_leak, p.leak);
  }
  std::array<double, 3> refined{};
  for (std::size_t q = 0; q < 3; ++q) {
    const double lo = std::max(0.0, (arg[q] - 1) * dt);
    const double hi = std::min(horizon, (arg[q] + 1) * dt);
    const auto f = [&](double t) {
      const Probabilities p = probabilities_at(rp, j, basis, t);
      return q == 0 ? p.p14 : (q == 1 ? p.p21 : p.p24);
    };
    refined[q] = std::max(best[q], golden_max(f, lo, hi));
  }
  row.p14_numeric = refined[0];
  row.p21_numeric = refined[1];
  row.p24_numeric = refined[2];
  row.agree = std::abs(row.p14_numeric - row.p14_max) < kAgreement &&
              std::abs(row.p21_numeric - row.p21_max) < kAgreement &&
              std::abs(row.p24_numeric - row.p24_max) < kAgreement;
  return row;
}

ScanResult scan(double A, double A0, double J, const std::vector<double>& omega_grid,
                const ScanOptions& options) {
  for (double w : omega_grid) {
    if (w == 0.0) {
      throw Error(ErrorKind::ZeroDriveFrequency, "omega grid must exclude 0");
    }
  }
  ScanResult result;
  result.rows.resize(omega_grid.size());
  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(1, omega_grid.size())));

  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    for (std::size_t i = next++; i < omega_grid.size(); i = next++) {
      result.rows[i] = scan_row(A, A0, J, omega_grid[i], options);
    }
  };
  if (workers == 1) {
    work();
    return result;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back(work);
  }
  pool.clear();
  return result;
}

}  // namespace twospin
