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

#include "twospin/numlin.hpp"

#include <string_view>

namespace twospin {

/// Which closed form (or the numerical oracle) produced a propagator.
enum class Method {
  Identity,
  FreeInteraction,
  Noninteracting,
  EqualFields,
  ConstantParallel,
  RabiSecondSpin,
  EqualRabi,
  ConstantSpectral,
  RotatingFrameSpectral,
  ParallelReduction,
  Oracle,
};

std::string_view method_label(Method m);

/// Evolution operator R mapping Psi(t0) to Psi(t1).
struct Propagator {
  CMat4 matrix = CMat4::Identity();
  double t0 = 0.0;
  double t1 = 0.0;
  Method method = Method::Identity;
};

}  // namespace twospin
