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

// Problem description: external fields, exchange coupling and reference time.
// All quantities are in units of inverse time (hbar = 1).

#include "twospin/numlin.hpp"

#include <array>
#include <utility>
#include <variant>
#include <vector>

namespace twospin {

enum class Interpolation { MonotoneCubic, Linear };

struct Knot {
  double t = 0.0;
  double value = 0.0;
  friend bool operator==(const Knot&, const Knot&) = default;
};

/// A real scalar function of time: either a constant or an interpolated
/// table of samples.  Used for the exchange coupling J(t) and for the
/// magnitudes of fields along a fixed axis.
class ScalarProfile {
 public:
  ScalarProfile() = default;

  static ScalarProfile constant(double value);
  /// Knots must be strictly increasing in t; at least two are required.
  static ScalarProfile samples(std::vector<Knot> knots,
                               Interpolation interp = Interpolation::MonotoneCubic);

  [[nodiscard]] bool is_constant() const noexcept { return knots_.empty(); }
  [[nodiscard]] double constant_value() const noexcept { return value_; }
  [[nodiscard]] const std::vector<Knot>& knots() const noexcept { return knots_; }
  [[nodiscard]] Interpolation interpolation() const noexcept { return interp_; }

  /// Knot span; (-inf, +inf) for constants.
  [[nodiscard]] std::pair<double, double> span() const;

  /// Throws Error(OutOfRange) outside the knot span.
  [[nodiscard]] double value_at(double t) const;

  /// Signed integral over [a, b].  Exact for the interpolant: each knot
  /// interval is integrated with Simpson's rule, which is exact for cubics.
  [[nodiscard]] double integral(double a, double b) const;

  friend bool operator==(const ScalarProfile&, const ScalarProfile&) = default;

 private:
  [[nodiscard]] std::size_t interval_of(double t) const;
  [[nodiscard]] double eval_in(std::size_t k, double t) const;
  void check_in_span(double t) const;

  double value_ = 0.0;
  std::vector<Knot> knots_;
  std::vector<double> slopes_;
  Interpolation interp_ = Interpolation::MonotoneCubic;
};

/// Phi(t) = integral of J from t0 to t.
double interaction_integral(const ScalarProfile& j, double t0, double t);

struct ZeroField {
  friend bool operator==(const ZeroField&, const ZeroField&) = default;
};

struct ConstantField {
  Vec3 vector = Vec3::Zero();
  friend bool operator==(const ConstantField& a, const ConstantField& b) {
    return a.vector == b.vector;
  }
};

/// Circularly polarized field (A cos(omega t + phi), A sin(omega t + phi), A0).
struct RabiField {
  RabiField(double amplitude, double longitudinal, double drive, double phase = 0.0);

  double A;
  double A0;
  double omega;
  double phi;

  friend bool operator==(const RabiField&, const RabiField&) = default;
};

/// Field (0, 0, B(t)).
struct ParallelZField {
  ScalarProfile profile;
  friend bool operator==(const ParallelZField&, const ParallelZField&) = default;
};

using FieldSpec = std::variant<ZeroField, ConstantField, RabiField, ParallelZField>;

Vec3 field_at(const FieldSpec& f, double t);

/// Span on which the field can be evaluated.
std::pair<double, double> field_span(const FieldSpec& f);

/// H(G, F, J): G acts on the first spin, F on the second.
struct TwoSpinProblem {
  FieldSpec G = ZeroField{};
  FieldSpec F = ZeroField{};
  ScalarProfile J = ScalarProfile::constant(0.0);
  double t0 = 0.0;

  friend bool operator==(const TwoSpinProblem&, const TwoSpinProblem&) = default;
};

/// Eigenbasis of (Sigma . rho): three triplet states and the singlet Psi_3.
struct StationaryBasis {
  std::array<CVec4, 4> states;

  [[nodiscard]] const CVec4& operator[](int i) const { return states.at(static_cast<std::size_t>(i - 1)); }
  /// Columns are Psi_1..Psi_4.
  [[nodiscard]] CMat4 matrix() const;
};

StationaryBasis stationary_basis();

}  // namespace twospin
