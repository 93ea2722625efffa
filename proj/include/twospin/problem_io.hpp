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

// JSON problem files.
//
//   {"G": <field>, "F": <field>, "J": <profile>, "t0": 0}
//
//   field:   {"type":"zero"}
//            {"type":"constant","vector":[x,y,z]}
//            {"type":"rabi","A":..,"A0":..,"omega":..,"phi":..}     (phi optional)
//            {"type":"parallel_z","profile":<profile>}
//   profile: {"type":"constant","value":v}
//            {"type":"samples","knots":[[t,v],...],"interp":"cubic"|"linear"}
//
// "J" and "t0" are optional.  Unknown keys are rejected.

#include "twospin/model.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace twospin {

using Json = nlohmann::json;

/// Throws Error(InvalidArgument) on any schema violation.
TwoSpinProblem parse_problem(const Json& doc);
TwoSpinProblem parse_problem_text(std::string_view text);
TwoSpinProblem load_problem(const std::string& path);

Json to_json(const TwoSpinProblem& p);
Json to_json(const FieldSpec& f);
Json to_json(const ScalarProfile& s);

/// Shortest decimal string that round-trips to the same double.
std::string format_number(double x);

}  // namespace twospin
