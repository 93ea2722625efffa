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

#include "twospin/cli.hpp"

#include "twospin/dispatch.hpp"
#include "twospin/problem_io.hpp"
#include "twospin/resonance.hpp"
#include "twospin/spectrum.hpp"
#include "twospin/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace twospin::cli {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text, const std::string& what) {
  double x = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, x);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(x)) {
    throw InputError(what + ": not a finite number: \"" + std::string(text) + "\"");
  }
  return x;
}

Vec3 parse_vec3(const std::string& text, const std::string& what) {
  Vec3 v;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((i < 2) == (comma == std::string::npos)) {
      throw InputError(what + ": expected x,y,z");
    }
    const std::size_t stop = i < 2 ? comma : text.size();
    v(i) = parse_double(std::string_view(text).substr(start, stop - start), what);
    start = stop + 1;
  }
  return v;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(what + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CVec4 load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError(path + ": cannot open state file");
  }
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_array() || doc.size() != 4) {
    throw InputError(path + ": expected four [re, im] amplitudes");
  }
  CVec4 psi;
  for (int i = 0; i < 4; ++i) {
    psi(i) = complex_from(doc[static_cast<std::size_t>(i)], path);
  }
  return psi;
}

// Writes to the file when a path is given, otherwise to out.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    throw InputError(path + ": cannot write output");
  }
}

unsigned threads_from_env() {
  const char* value = std::getenv("TWOSPIN_THREADS");
  if (value == nullptr || *value == '\0') {
    return 0;
  }
  unsigned n = 0;
  const std::string_view text(value);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), n);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw InputError("TWOSPIN_THREADS: expected a non-negative integer");
  }
  return n;
}

struct PropagateArgs {
  std::string problem;
  double t = 0.0;
  std::string state;
  bool full_matrix = false;
  std::string method = "auto";
  bool cross_check = false;
  std::string out;
};

int cmd_propagate(const PropagateArgs& a, std::ostream& out) {
  const TwoSpinProblem p = load_problem(a.problem);
  const MethodChoice choice = a.method == "closed"   ? MethodChoice::Closed
                              : a.method == "oracle" ? MethodChoice::Oracle
                                                     : MethodChoice::Auto;
  std::optional<CVec4> psi0;
  if (!a.state.empty()) {
    psi0 = load_state(a.state);
  }
  const Propagator r = propagate(p, a.t, choice);
  Json doc{{"method", std::string(method_label(r.method))},
           {"t0", r.t0},
           {"t1", r.t1},
           {"unitarity_defect", unitarity_defect(r.matrix)}};
  if (a.cross_check && r.method != Method::Oracle) {
    doc["oracle_residual"] = max_abs_diff(r.matrix, integrate_propagator(p, p.t0, a.t).propagator.matrix);
  }
  if (psi0) {
    const CVec4 psi = r.matrix * *psi0;
    Json state = Json::array();
    for (int i = 0; i < 4; ++i) {
      state.push_back(complex_json(psi(i)));
    }
    doc["state"] = state;
  }
  if (!psi0 || a.full_matrix) {
    Json rows = Json::array();
    for (int i = 0; i < 4; ++i) {
      Json row = Json::array();
      for (int j = 0; j < 4; ++j) {
        row.push_back(complex_json(r.matrix(i, j)));
      }
      rows.push_back(row);
    }
    doc["matrix"] = rows;
  }
  emit(a.out, doc.dump(2) + "\n", out);
  return kOk;
}

struct SpectrumArgs {
  double gamma = 0.0;
  std::string a = "0,0,0";
  std::string b = "0,0,0";
  std::string out;
};

int cmd_spectrum(const SpectrumArgs& s, std::ostream& out) {
  const Vec3 a = parse_vec3(s.a, "--a");
  const Vec3 b = parse_vec3(s.b, "--b");
  const SpectralResult r = solve_levels(s.gamma, a, b);
  Json vectors = Json::array();
  for (const CVec4& v : r.vectors) {
    Json col = Json::array();
    for (int i = 0; i < 4; ++i) {
      col.push_back(complex_json(v(i)));
    }
    vectors.push_back(col);
  }
  const Json doc{{"roots", r.roots},
                 {"multiplicity", r.multiplicity},
                 {"eigenvectors", vectors},
                 {"quartic", r.quartic.c},
                 {"poly_residuals", r.poly_residuals},
                 {"vector_residuals", r.vector_residuals},
                 {"scale", r.scale}};
  emit(s.out, doc.dump(2) + "\n", out);
  return kOk;
}

struct ScanArgs {
  double A = 0.0;
  double A0 = 0.0;
  double J = 0.0;
  double omega_min = 0.0;
  double omega_max = 0.0;
  int points = 0;
  bool allow_negative = false;
  std::string out;
};

int cmd_scan(const ScanArgs& s, std::ostream& out) {
  if (s.points < 1) {
    throw InputError("--points must be at least 1");
  }
  if (s.points > 1 && !(s.omega_max > s.omega_min)) {
    throw InputError("--omega-max must exceed --omega-min");
  }
  std::vector<double> grid;
  for (int i = 0; i < s.points; ++i) {
    grid.push_back(s.points == 1 ? s.omega_min
                                 : s.omega_min + (s.omega_max - s.omega_min) * i / (s.points - 1));
  }
  grid.back() = s.points == 1 ? s.omega_min : s.omega_max;
  for (double w : grid) {
    if (w == 0.0) {
      throw InputError("omega grid contains 0");
    }
    if (w < 0.0 && !s.allow_negative) {
      throw InputError("omega grid contains negative drive frequencies; pass --allow-negative");
    }
  }
  ScanOptions options;
  options.threads = threads_from_env();
  const ScanResult result = scan(s.A, s.A0, s.J, grid, options);
  std::string csv = "omega,p14_max,p21_max,p24_max,p3_leak,t14,t21,t24\n";
  for (const ScanRow& r : result.rows) {
    for (double v : {r.omega, r.p14_max, r.p21_max, r.p24_max, r.p3_leak, r.t14, r.t21}) {
      csv += format_number(v);
      csv += ',';
    }
    csv += format_number(r.t24);
    csv += '\n';
  }
  emit(s.out, csv, out);
  return kOk;
}

int cmd_verify(bool quick, bool mutate, std::ostream& out) {
  VerifyOptions options;
  options.quick = quick;
  options.corrupt_closed_form = mutate;
  const auto results = run_verification(options);
  bool all = true;
  for (const CheckResult& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(40) << r.name << " "
        << format_number(r.value) << " < " << format_number(r.tolerance) << "\n";
  }
  out << (all ? "all checks passed" : "verification failed") << "\n";
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoClosedForm:
      return kNoClosedForm;
    case ErrorKind::NoConvergence:
    case ErrorKind::DegenerateDenominator:
    case ErrorKind::NotAnEigenpair:
      return kNumericFailure;
    default:
      return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-spin Schroedinger equation solver"};
  app.require_subcommand(1);

  PropagateArgs pa;
  auto* propagate_cmd = app.add_subcommand("propagate", "Propagator or evolved state at time t");
  propagate_cmd->add_option("--problem", pa.problem, "Problem JSON file")->required();
  propagate_cmd->add_option("--t", pa.t, "Final time")->required();
  auto* state_opt = propagate_cmd->add_option("--state", pa.state, "Initial state JSON file");
  propagate_cmd->add_flag("--full-matrix", pa.full_matrix, "Also write the propagator matrix")
      ->needs(state_opt);
  propagate_cmd->add_option("--method", pa.method)
      ->check(CLI::IsMember({"auto", "closed", "oracle"}));
  propagate_cmd->add_flag("--cross-check", pa.cross_check, "Report the distance to the RK4 oracle");
  propagate_cmd->add_option("--out", pa.out, "Output file (default stdout)");

  SpectrumArgs sa;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Stationary levels of gamma S.r + S.a + r.b");
  spectrum_cmd->add_option("--gamma", sa.gamma)->required();
  spectrum_cmd->add_option("--a", sa.a, "x,y,z")->required();
  spectrum_cmd->add_option("--b", sa.b, "x,y,z")->required();
  spectrum_cmd->add_option("--out", sa.out);

  ScanArgs ca;
  auto* scan_cmd = app.add_subcommand("scan", "Resonance scan over the drive frequency");
  scan_cmd->add_option("--A", ca.A)->required();
  scan_cmd->add_option("--A0", ca.A0)->required();
  scan_cmd->add_option("--J", ca.J)->required();
  scan_cmd->add_option("--omega-min", ca.omega_min)->required();
  scan_cmd->add_option("--omega-max", ca.omega_max)->required();
  scan_cmd->add_option("--points", ca.points)->required();
  scan_cmd->add_flag("--allow-negative", ca.allow_negative);
  scan_cmd->add_option("--out", ca.out, "CSV file (default stdout)");

  bool quick = false;
  bool mutate = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_flag("--quick", quick, "Algebraic identities only");
  verify_cmd->add_flag("--mutate", mutate, "Corrupt closed forms; the suite must fail");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) {
    reversed.pop_back();
  }
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*propagate_cmd) {
      return cmd_propagate(pa, out);
    }
    if (*spectrum_cmd) {
      return cmd_spectrum(sa, out);
    }
    if (*scan_cmd) {
      return cmd_scan(ca, out);
    }
    return cmd_verify(quick, mutate, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace twospin::cli
