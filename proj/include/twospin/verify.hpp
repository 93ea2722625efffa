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

// Self-verification suite behind `twospin verify`.

#include <string>
#include <vector>

namespace twospin {

struct VerifyOptions {
  /// Algebraic identities only; skips everything that integrates.
  bool quick = false;
  /// Mutation hook: perturb every closed-form propagator before it is compared.
  bool corrupt_closed_form = false;
  unsigned seed = 20260418;
};

struct CheckResult {
  std::string name;
  /// Worst observed deviation.
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace twospin
