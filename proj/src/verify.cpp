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

#include "twospin/verify.hpp"

#include "twospin/dispatch.hpp"
#include "twospin/hamiltonian.hpp"
#include "twospin/oracle.hpp"
#include "twospin/propagators.hpp"
#include "twospin/reductions.hpp"
#include "twospin/resonance.hpp"
#include "twospin/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace twospin {
namespace {

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options), rng_(options.seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Vec3 vec(double r) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }

  CMat4 closed(CMat4 m) const {
    if (options_.corrupt_closed_form) {
      m(0, 1) += 1e-6;
    }
    return m;
  }

  void check(const std::string& name, double tolerance, const std::function<double()>& measure) {
    const double value = measure();
    results_.push_back({name, value, tolerance, std::isfinite(value) && value < tolerance});
  }

  [[nodiscard]] bool quick() const { return options_.quick; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  VerifyOptions options_;
  std::mt19937_64 rng_;
  std::vector<CheckResult> results_;
};

RabiField random_rabi(Suite& s, double omega) {
  return RabiField(s.uniform(0.05, 1.0), s.uniform(-1.0, 1.0), omega, s.uniform(-3.0, 3.0));
}

TwoSpinProblem random_closed_problem(Suite& s, int family) {
  TwoSpinProblem p;
  const double w = s.uniform(0.3, 2.5);
  switch (family % 6) {
    case 0:
      p.J = ScalarProfile::constant(s.uniform(-2.0, 2.0));
      break;
    case 1:
      p.G = random_rabi(s, w);
      p.F = ConstantField{s.vec(1.0)};
      break;
    case 2:
      p.G = p.F = random_rabi(s, w);
      p.J = ScalarProfile::constant(s.uniform(-2.0, 2.0));
      break;
    case 3:
      p.G = ConstantField{Vec3(0.0, 0.0, s.uniform(-1.0, 1.0))};
      p.F = ConstantField{Vec3(0.0, 0.0, s.uniform(-1.0, 1.0))};
      p.J = ScalarProfile::constant(s.uniform(-2.0, 2.0));
      break;
    case 4:
      p.G = ConstantField{s.vec(1.0)};
      p.F = ConstantField{s.vec(1.0)};
      p.J = ScalarProfile::constant(s.uniform(-2.0, 2.0));
      break;
    default:
      p.G = random_rabi(s, w);
      p.F = random_rabi(s, w);
      p.J = ScalarProfile::constant(s.uniform(-2.0, 2.0));
      break;
  }
  return p;
}

void algebraic_checks(Suite& s) {
  s.check("pauli_algebra", 1e-14, [] {
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        CMat2 expected = (i == j) ? CMat2(CMat2::Identity()) : CMat2(CMat2::Zero());
        for (int k = 1; k <= 3; ++k) {
          const int eps = (i - j) * (j - k) * (k - i) / 2;
          expected += kI * static_cast<double>(eps) * pauli(k);
        }
        worst = std::max(worst, max_abs_diff(pauli(i) * pauli(j), expected));
      }
    }
    return worst;
  });
  s.check("swap_exchanges_spins", 1e-14, [] {
    const CMat4 a = swap_matrix();
    double worst = max_abs_diff(a * a, CMat4::Identity());
    for (int i = 1; i <= 3; ++i) {
      worst = std::max(worst, max_abs_diff(a * Sigma(i) * a, rho(i)));
    }
    return worst;
  });
  s.check("stationary_basis_eigenvalues", 1e-14, [] {
    const StationaryBasis basis = stationary_basis();
    const double eig[] = {1.0, 1.0, -3.0, 1.0};
    double worst = 0.0;
    for (int i = 1; i <= 4; ++i) {
      worst = std::max(worst, max_abs_diff(sigma_dot_rho() * basis[i], eig[i - 1] * basis[i]));
    }
    return worst;
  });
  s.check("rabi_field_traces_circle", 1e-12, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const RabiField r = random_rabi(s, s.uniform(0.1, 4.0));
      const Vec3 v = field_at(r, s.uniform(-50.0, 50.0));
      worst = std::max(worst, std::abs(std::hypot(v(0), v(1)) - r.A));
    }
    return worst;
  });
  s.check("interaction_integral_additive", 1e-10, [&s] {
    const auto j = ScalarProfile::samples({{0.0, 0.3}, {1.0, -0.8}, {2.5, 1.2}, {4.0, 0.1}});
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double a = s.uniform(0.0, 4.0);
      const double b = s.uniform(0.0, 4.0);
      const double c = s.uniform(0.0, 4.0);
      worst = std::max(worst, std::abs(interaction_integral(j, a, b) + interaction_integral(j, b, c) -
                                       interaction_integral(j, a, c)));
    }
    return worst;
  });
  s.check("hamiltonian_swap_relation", 1e-13, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      TwoSpinProblem p;
      p.G = random_rabi(s, s.uniform(0.1, 3.0));
      p.F = ConstantField{s.vec(1.5)};
      p.J = ScalarProfile::constant(s.uniform(-2.0, 2.0));
      worst = std::max(worst, check_swap(p, s.uniform(-10.0, 10.0)));
    }
    return worst;
  });
  s.check("hamiltonian_matrix_forms", 1e-12, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Vec3 g = s.vec(2.0);
      const Vec3 f = s.vec(2.0);
      const double j = s.uniform(-2.0, 2.0);
      const CMat4 h = two_spin_matrix(g, f, j);
      worst = std::max({worst, max_abs_diff(h, two_spin_matrix_entrywise(g, f, j)),
                        hermiticity_defect(h)});
    }
    return worst;
  });
  s.check("closed_form_unitarity", 1e-10, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 120; ++k) {
      const TwoSpinProblem p = random_closed_problem(s, k);
      worst = std::max(worst, unitarity_defect(s.closed(propagate_closed(p, 0.0, s.uniform(0.0, 10.0)).matrix)));
    }
    return worst;
  });
  s.check("constant_problems_match_expm", 1e-10, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 60; ++k) {
      const TwoSpinProblem p = random_closed_problem(s, k % 2 == 0 ? 3 : 4);
      const double t = s.uniform(0.0, 10.0);
      const CMat4 h = two_spin_H(p, 0.0).matrix;
      worst = std::max(worst, max_abs_diff(s.closed(propagate_closed(p, 0.0, t).matrix),
                                           expm_skew_hermitian(h, t)));
    }
    return worst;
  });
  s.check("free_interaction_matches_expm", 1e-10, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 40; ++k) {
      const double j = s.uniform(-3.0, 3.0);
      const double t = s.uniform(0.0, 10.0);
      const CMat4 r = s.closed(prop_free_interaction(ScalarProfile::constant(j), 0.0, t).matrix);
      worst = std::max(worst, max_abs_diff(r, expm_skew_hermitian(CMat4(0.5 * j * sigma_dot_rho()), t)));
    }
    return worst;
  });
  s.check("swap_symmetry", 1e-8, [&s] {
    double worst = 0.0;
    const CMat4 a = swap_matrix();
    for (int k = 0; k < 50; ++k) {
      const TwoSpinProblem p = random_closed_problem(s, k % 2 == 0 ? 4 : 5);
      const double t = s.uniform(0.0, 10.0);
      const CMat4 r = s.closed(propagate_closed(p, 0.0, t).matrix);
      worst = std::max(worst, max_abs_diff(a * r * a, propagate_closed(swapped(p), 0.0, t).matrix));
    }
    return worst;
  });
  s.check("literal_rabi_matches_rotating_frame", 1e-10, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const RabiParams rp = RabiParams::make(s.uniform(0.05, 2.0), s.uniform(-2.0, 2.0),
                                             s.uniform(0.1, 4.0));
      const double t = s.uniform(0.0, 10.0);
      worst = std::max(worst, max_abs_diff(rabi_one_spin(rp, t), rabi_one_spin_rotating(rp, t)));
    }
    return worst;
  });
  s.check("quartic_expanded_equals_factored", 1e-9, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double g = s.uniform(-2.0, 2.0);
      const Vec3 a = s.vec(2.0);
      const Vec3 b = s.vec(2.0);
      const Quartic e = quartic_d(g, a, b);
      const Quartic f = quartic_d_factored_coefficients(g, a, b);
      for (std::size_t i = 0; i < 5; ++i) {
        worst = std::max(worst, std::abs(e.c[i] - f.c[i]));
      }
    }
    return worst;
  });
  s.check("spectrum_special_cases", 1e-10, [] {
    const auto singlet = solve_levels(1.0, Vec3::Zero(), Vec3::Zero());
    const auto rabi = solve_levels(1.0, Vec3(0, 0, 1), Vec3(0, 0, 1));
    const double want1[] = {-3.0, 1.0, 1.0, 1.0};
    const double want2[] = {-3.0, -1.0, 1.0, 3.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      worst = std::max({worst, std::abs(singlet.roots[i] - want1[i]), std::abs(rabi.roots[i] - want2[i])});
    }
    return worst;
  });
  s.check("spectrum_matches_dense_eigenvalues", 1e-9, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double g = s.uniform(-2.0, 2.0);
      const Vec3 a = s.vec(2.0);
      const Vec3 b = s.vec(2.0);
      const SpectralResult r = solve_levels(g, a, b);
      const Eigen::SelfAdjointEigenSolver<CMat4> dense(level_matrix(g, a, b));
      for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(r.roots[i] - dense.eigenvalues()(static_cast<Eigen::Index>(i))));
      }
    }
    return worst;
  });
  s.check("selection_rule", 1e-10, [&s] {
    const CMat4 basis = stationary_basis().matrix();
    double worst = 0.0;
    for (int k = 0; k < 400; ++k) {
      const RabiParams rp = RabiParams::make(s.uniform(0.05, 1.0), s.uniform(0.2, 2.0), s.uniform(0.1, 4.0));
      const CMat4 e = basis.adjoint() *
                      s.closed(prop_equal_rabi(rp, ScalarProfile::constant(s.uniform(-2, 2)), 0.0,
                                               s.uniform(0.0, 20.0)).matrix) *
                      basis;
      for (int i : {0, 1, 3}) {
        worst = std::max({worst, std::abs(e(2, i)), std::abs(e(i, 2))});
      }
    }
    return worst;
  });
}

void integration_checks(Suite& s) {
  const IntegratorConfig cfg;
  s.check("closed_forms_match_oracle", 1e-8, [&] {
    double worst = 0.0;
    for (int k = 0; k < 12; ++k) {
      const TwoSpinProblem p = random_closed_problem(s, k);
      const double t = s.uniform(0.0, 5.0);
      const CMat4 closed = s.closed(propagate_closed(p, 0.0, t).matrix);
      worst = std::max(worst, max_abs_diff(closed, integrate_propagator(p, 0.0, t, cfg).propagator.matrix));
    }
    return worst;
  });
  s.check("oracle_norm_preservation", 1e-9, [&] {
    TwoSpinProblem p;
    p.G = random_rabi(s, 1.3);
    p.F = ParallelZField{ScalarProfile::samples({{0.0, 0.2}, {3.0, -0.5}, {6.0, 0.8}})};
    p.J = ScalarProfile::samples({{0.0, 0.5}, {6.0, -0.4}});
    const auto ham = [&p](double t) { return two_spin_H(p, t).matrix; };
    CVec4 psi0(0.5, Complex(0.0, 0.5), -0.5, Complex(0.5, 0.0));
    return std::abs(ode::rk4_adaptive(ham, psi0, 0.0, 6.0, cfg).y.norm() - 1.0);
  });
  s.check("second_resonance_suppressed", 1e-6, [] {
    const ResonancePair w = resonance_frequencies(0.25, 1.0);
    const ScanRow first = scan_row(0.25, 1.0, 0.3, w.omega1);
    const ScanRow second = scan_row(0.25, 1.0, 0.3, w.omega2);
    // max P21 at w2 is 1/2, strictly below max P14 = 1 at w1.
    return second.p21_numeric < first.p14_numeric ? std::abs(first.p14_numeric - 2.0 * second.p21_numeric) : 1.0;
  });
  s.check("resonance_maxima", 1e-6, [&s] {
    const double A = 0.25;
    const double A0 = 1.0;
    const ResonancePair w = resonance_frequencies(A, A0);
    const ScanRow r1 = scan_row(A, A0, s.uniform(-1.0, 1.0), w.omega1);
    const ScanRow r2 = scan_row(A, A0, s.uniform(-1.0, 1.0), w.omega2);
    return std::max({std::abs(r1.p14_numeric - 1.0), std::abs(r1.p21_numeric - 0.5),
                     std::abs(r1.p24_numeric - 0.5), std::abs(r2.p21_numeric - 0.5),
                     std::abs(r2.p24_numeric - 0.5)});
  });
  s.check("probabilities_independent_of_J", 1e-10, [&s] {
    const CMat4 basis = stationary_basis().matrix();
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const RabiParams rp = RabiParams::make(s.uniform(0.05, 1.0), s.uniform(0.2, 2.0), s.uniform(0.1, 4.0));
      const double t = s.uniform(0.0, 20.0);
      const CMat4 ref = basis.adjoint() * prop_equal_rabi(rp, ScalarProfile::constant(0.0), 0.0, t).matrix * basis;
      const CMat4 alt = basis.adjoint() *
                        s.closed(prop_equal_rabi(rp, ScalarProfile::constant(s.uniform(-3, 3)), 0.0, t).matrix) *
                        basis;
      for (int i : {0, 1, 3}) {
        for (int j : {0, 1, 3}) {
          worst = std::max(worst, std::abs(std::norm(ref(j, i)) - std::norm(alt(j, i))));
        }
      }
    }
    return worst;
  });
  s.check("rotating_frame_closure", 1e-8, [&s] {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double w = s.uniform(0.3, 2.5);
      const RabiField f = random_rabi(s, w);
      const RabiField g = random_rabi(s, w);
      const double j = s.uniform(-2.0, 2.0);
      const RotatingFrameProblem rf = rotating_frame_reduce(f, g, j);
      const SpectralResult levels = solve_levels(rf.gamma, rf.a, rf.b);
      TwoSpinProblem p;
      p.G = g;
      p.F = f;
      p.J = ScalarProfile::constant(j);
      const auto ham = [&p](double t) { return two_spin_H(p, t).matrix; };
      for (std::size_t i = 0; i < 4; ++i) {
        const auto state = [&](double t) {
          return rotating_frame_solution(rf, levels.roots[i], levels.vectors[i], t);
        };
        worst = std::max(worst, schrodinger_residual(state, ham, s.uniform(0.5, 10.0), 1e-3));
      }
    }
    return worst;
  });
  s.check("parallel_reduction_residual", 1e-7, [&s] {
    const auto J = ScalarProfile::samples({{0.0, 0.4}, {2.0, 1.1}, {4.0, -0.3}, {6.0, 0.5}});
    const auto B2 = ScalarProfile::samples({{0.0, 0.2}, {3.0, -0.6}, {6.0, 0.9}});
    const double eps = s.uniform(-1.0, 1.0);
    std::vector<Knot> shifted;
    for (const Knot& k : B2.knots()) {
      shifted.push_back({k.t, k.value + eps});
    }
    const auto B1 = ScalarProfile::samples(shifted);
    ParallelReduction red = reduce_parallel(B1, B2, J);
    red.reduced_step = 2e-4;
    TwoSpinProblem p;
    p.G = ParallelZField{B1};
    p.F = ParallelZField{B2};
    p.J = J;
    const auto ham = [&p](double t) { return two_spin_H(p, t).matrix; };
    const CVec2 psi0(std::sqrt(0.5), kI * std::sqrt(0.5));
    const auto state = [&](double t) { return assemble_parallel(red, 0.6, 0.8, psi0, t); };
    return schrodinger_residual(state, ham, s.uniform(1.0, 5.0), 5e-3);
  });
  s.check("rk4_order_ratio", 4.0, [] {
    TwoSpinProblem p;
    p.G = ConstantField{Vec3(0.3, -0.2, 0.5)};
    p.F = ConstantField{Vec3(-0.1, 0.4, 0.2)};
    p.J = ScalarProfile::constant(0.7);
    const CMat4 h = two_spin_H(p, 0.0).matrix;
    const auto ham = [&h](double) { return h; };
    const CMat4 exact = expm_skew_hermitian(h, 2.0);
    const double e1 = max_abs_diff(ode::rk4_fixed(ham, CMat4(CMat4::Identity()), 0.0, 2.0, 40), exact);
    const double e2 = max_abs_diff(ode::rk4_fixed(ham, CMat4(CMat4::Identity()), 0.0, 2.0, 80), exact);
    return std::abs(e1 / e2 - 16.0);
  });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Suite suite(options);
  algebraic_checks(suite);
  if (!suite.quick()) {
    integration_checks(suite);
  }
  return suite.take();
}

}  // namespace twospin
