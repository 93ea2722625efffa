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

// Chooses a closed-form family for a problem, or falls back to the oracle.

#include "twospin/model.hpp"
#include "twospin/oracle.hpp"
#include "twospin/propagator.hpp"

#include <optional>

namespace twospin {

enum class MethodChoice { Auto, Closed, Oracle };

/// Closed-form family that applies to the problem, if any.
std::optional<Method> closed_form_family(const TwoSpinProblem& p);

/// Closed-form propagator from t0 to t1.  Throws Error(NoClosedForm).
Propagator propagate_closed(const TwoSpinProblem& p, double t0, double t1);

/// Propagator from p.t0 to t1.
Propagator propagate(const TwoSpinProblem& p, double t1, MethodChoice choice = MethodChoice::Auto,
                     const IntegratorConfig& cfg = {});

}  // namespace twospin
