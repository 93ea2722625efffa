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

#include "twospin/problem_io.hpp"

#include "twospin/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace twospin {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, where + ": " + what);
}

void require_object(const Json& j, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) {
    fail(where, "expected an object");
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const auto key : allowed) {
      known = known || item.key() == key;
    }
    if (!known) {
      fail(where, "unknown key \"" + item.key() + "\"");
    }
  }
}

const Json& member(const Json& j, const std::string& where, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    fail(where, std::string("missing key \"") + key + "\"");
  }
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) {
    fail(where, "expected a number");
  }
  const double x = j.get<double>();
  if (!std::isfinite(x)) {
    fail(where, "expected a finite number");
  }
  return x;
}

std::string type_of(const Json& j, const std::string& where) {
  const Json& t = member(j, where, "type");
  if (!t.is_string()) {
    fail(where + ".type", "expected a string");
  }
  return t.get<std::string>();
}

ScalarProfile parse_profile(const Json& j, const std::string& where) {
  const std::string type = type_of(j, where);
  if (type == "constant") {
    require_object(j, where, {"type", "value"});
    return ScalarProfile::constant(number(member(j, where, "value"), where + ".value"));
  }
  if (type != "samples") {
    fail(where + ".type", "unknown profile type \"" + type + "\"");
  }
  require_object(j, where, {"type", "knots", "interp"});
  Interpolation interp = Interpolation::MonotoneCubic;
  if (const auto it = j.find("interp"); it != j.end()) {
    if (*it == "linear") {
      interp = Interpolation::Linear;
    } else if (*it != "cubic") {
      fail(where + ".interp", "expected \"cubic\" or \"linear\"");
    }
  }
  const Json& knots = member(j, where, "knots");
  if (!knots.is_array()) {
    fail(where + ".knots", "expected an array of [t, value] pairs");
  }
  std::vector<Knot> out;
  for (std::size_t k = 0; k < knots.size(); ++k) {
    const std::string at = where + ".knots[" + std::to_string(k) + "]";
    if (!knots[k].is_array() || knots[k].size() != 2) {
      fail(at, "expected a [t, value] pair");
    }
    out.push_back({number(knots[k][0], at), number(knots[k][1], at)});
  }
  try {
    return ScalarProfile::samples(std::move(out), interp);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

FieldSpec parse_field(const Json& j, const std::string& where) {
  const std::string type = type_of(j, where);
  if (type == "zero") {
    require_object(j, where, {"type"});
    return ZeroField{};
  }
  if (type == "constant") {
    require_object(j, where, {"type", "vector"});
    const Json& v = member(j, where, "vector");
    if (!v.is_array() || v.size() != 3) {
      fail(where + ".vector", "expected [x, y, z]");
    }
    return ConstantField{Vec3(number(v[0], where + ".vector"), number(v[1], where + ".vector"),
                              number(v[2], where + ".vector"))};
  }
  if (type == "rabi") {
    require_object(j, where, {"type", "A", "A0", "omega", "phi"});
    const double phi = j.contains("phi") ? number(j["phi"], where + ".phi") : 0.0;
    try {
      return RabiField(number(member(j, where, "A"), where + ".A"),
                       number(member(j, where, "A0"), where + ".A0"),
                       number(member(j, where, "omega"), where + ".omega"), phi);
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (type == "parallel_z") {
    require_object(j, where, {"type", "profile"});
    return ParallelZField{parse_profile(member(j, where, "profile"), where + ".profile")};
  }
  fail(where + ".type", "unknown field type \"" + type + "\"");
}

Json vec_json(const Vec3& v) { return Json::array({v(0), v(1), v(2)}); }

}  // namespace

TwoSpinProblem parse_problem(const Json& doc) {
  require_object(doc, "problem", {"G", "F", "J", "t0"});
  TwoSpinProblem p;
  p.G = parse_field(member(doc, "problem", "G"), "G");
  p.F = parse_field(member(doc, "problem", "F"), "F");
  if (doc.contains("J")) {
    p.J = parse_profile(doc["J"], "J");
  }
  if (doc.contains("t0")) {
    p.t0 = number(doc["t0"], "t0");
  }
  return p;
}

TwoSpinProblem parse_problem_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("problem", e.what());
  }
  return parse_problem(doc);
}

TwoSpinProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(path, "cannot open problem file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem_text(text.str());
}

Json to_json(const ScalarProfile& s) {
  if (s.is_constant()) {
    return {{"type", "constant"}, {"value", s.constant_value()}};
  }
  Json knots = Json::array();
  for (const auto& k : s.knots()) {
    knots.push_back({k.t, k.value});
  }
  return {{"type", "samples"},
          {"knots", knots},
          {"interp", s.interpolation() == Interpolation::Linear ? "linear" : "cubic"}};
}

Json to_json(const FieldSpec& f) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZeroField>) {
          return {{"type", "zero"}};
        } else if constexpr (std::is_same_v<T, ConstantField>) {
          return {{"type", "constant"}, {"vector", vec_json(v.vector)}};
        } else if constexpr (std::is_same_v<T, RabiField>) {
          return {{"type", "rabi"}, {"A", v.A}, {"A0", v.A0}, {"omega", v.omega}, {"phi", v.phi}};
        } else {
          return {{"type", "parallel_z"}, {"profile", to_json(v.profile)}};
        }
      },
      f);
}

Json to_json(const TwoSpinProblem& p) {
  return {{"G", to_json(p.G)}, {"F", to_json(p.F)}, {"J", to_json(p.J)}, {"t0", p.t0}};
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace twospin
