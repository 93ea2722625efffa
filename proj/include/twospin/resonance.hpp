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

// Transition probabilities for one and two spins in a Rabi field and
// resonance scans over the drive frequency.

#include "twospin/numlin.hpp"
#include "twospin/propagators.hpp"

#include <vector>

namespace twospin {

/// |<2| u_F(t) |1>|^2 = (a'^2 / (a'^2 + a0^2)) sin^2(w_R t).
double rabi_probability(const RabiParams& rp, double t);

/// Matrix elements <Psi_j| R_t(F,F,J) |Psi_i> for both spins in the same Rabi
/// field and constant J, computed by sandwiching the composed propagator and
/// independently from products of one-spin amplitudes.
struct TwoSpinElements {
  /// direct(j-1, i-1) = <Psi_j| R |Psi_i>.
  CMat4 direct;
  /// exp(-i w gamma) <2|u|1>^2.
  Complex psi4_psi1;
  /// sqrt(2) exp(-i w gamma) <1|u|1><2|u|1>.
  Complex psi2_psi1;
  /// sqrt(2) exp(-i w gamma) <1|u|2><2|u|2>.
  Complex psi2_psi4;
  /// Largest disagreement between the two routes.
  double formula_defect = 0.0;
};

TwoSpinElements two_spin_elements(const RabiParams& rp, double J, double t);

struct ResonancePair {
  double omega1 = 0.0;
  double omega2 = 0.0;
  /// |omega2| < 1e-12.
  bool omega2_degenerate = false;
  /// omega2 > 0; a negative value (A > A0) lies outside the physical grid.
  bool omega2_physical = true;
};

/// omega1 = 2 A0, omega2 = 2 (A0 - A).
ResonancePair resonance_frequencies(double A, double A0);

struct ScanOptions {
  /// Time horizon for the numeric maxima; <= 0 selects 4 pi / w_R.
  double t_horizon = 0.0;
  int t_samples = 2048;
  /// Worker threads; 0 selects the hardware concurrency.
  unsigned threads = 0;
};

struct ScanRow {
  double omega = 0.0;
  /// Analytic maxima over t and the first time they are reached.
  double p14_max = 0.0;
  double p21_max = 0.0;
  double p24_max = 0.0;
  double t14 = 0.0;
  double t21 = 0.0;
  double t24 = 0.0;
  /// Largest |<Psi_3|R|Psi_k>|^2 or |<Psi_k|R|Psi_3>|^2, k != 3, on the grid.
  double p3_leak = 0.0;
  /// Grid search refined by golden-section search.
  double p14_numeric = 0.0;
  double p21_numeric = 0.0;
  double p24_numeric = 0.0;
  /// Analytic and numeric maxima agree within 1e-6.
  bool agree = false;
};

struct ScanResult {
  std::vector<ScanRow> rows;
};

/// Rows are independent and returned in the order of omega_grid.  Throws
/// Error(ZeroDriveFrequency) if the grid contains 0.
ScanResult scan(double A, double A0, double J, const std::vector<double>& omega_grid,
                const ScanOptions& options = {});

ScanRow scan_row(double A, double A0, double J, double omega, const ScanOptions& options = {});

}  // namespace twospin
