// Copyright 2026 The GaugeKit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUGEKIT_SCENARIO_HPP_
#define GAUGEKIT_SCENARIO_HPP_

// Declarative scenario runner.
//
// A scenario is a JSON document describing a seed solution, a gauge path,
// a time window, verification tolerances, and output files.  Running one
// builds the seed pair, applies the gauge transformation, certifies the
// result against the numerical oracle, and writes a trajectory table (CSV)
// plus a certification report (JSON).
//
// Exit codes: 0 = certified, 1 = configuration or I/O error, 2 = built but
// failed certification.  All output formatting is deterministic: fixed
// significant-digit printing, sorted report keys, no timestamps.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "gaugekit/adjoint.hpp"
#include "gaugekit/errors.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/lie.hpp"
#include "gaugekit/spinhalf.hpp"
#include "gaugekit/timefn.hpp"
#include "gaugekit/verify.hpp"

namespace gaugekit {

enum class SeedKind { constant, diagonal, explicit_spin };
enum class SignMode { automatic, plus, minus };

struct ScenarioOutputs {
  std::string trajectory = "trajectory.csv";
  std::string report = "report.json";
  int precision = 17;
};

// Parsed, validated scenario description.
struct Scenario {
  // system
  int levels = 2;
  double hbar = 1.0;
  double mu = 1.0;
  // seed
  SeedKind seed_kind = SeedKind::constant;
  Eigen::MatrixXcd hamiltonian;          // constant kind
  std::vector<TimeFunction> energies;    // diagonal kind
  double b0 = 0.0;                       // explicit-spin kind
  Eigen::VectorXcd psi0;
  // gauge
  std::vector<TimeFunction> alpha;
  SignMode sign = SignMode::automatic;
  // run
  double t0 = 0.0;
  double t1 = 1.0;
  int samples = 2;
  // verify
  CertifyOptions certify_options;
  // outputs
  ScenarioOutputs outputs;

  bool spin_mode() const { return seed_kind == SeedKind::explicit_spin; }
};

namespace detail {

inline const nlohmann::json& require_member(const nlohmann::json& j, const std::string& key,
                                            const std::string& path) {
  if (!j.is_object()) throw config_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw config_error(path + "." + key, "missing required field");
  return *it;
}

inline double as_number(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number()) throw config_error(path, "expected a number");
  return j.get<double>();
}

inline int as_integer(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) throw config_error(path, "expected an integer");
  return j.get<int>();
}

inline std::string as_string(const nlohmann::json& j, const std::string& path) {
  if (!j.is_string()) throw config_error(path, "expected a string");
  return j.get<std::string>();
}

inline std::vector<double> as_real_array(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw config_error(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Tagged time-function node: {"type": ..., ...}.
inline TimeFunction timefn_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw config_error(path, "expected a time-function object");
  const std::string type = as_string(require_member(j, "type", path), path + ".type");
  if (type == "constant") {
    return TimeFunction::constant(as_number(require_member(j, "value", path), path + ".value"));
  }
  if (type == "polynomial") {
    auto coeffs = as_real_array(require_member(j, "coefficients", path), path + ".coefficients");
    if (coeffs.empty()) throw config_error(path + ".coefficients", "must be non-empty");
    return TimeFunction::polynomial(std::move(coeffs));
  }
  if (type == "sinusoid") {
    const double amplitude =
        as_number(require_member(j, "amplitude", path), path + ".amplitude");
    const double frequency =
        as_number(require_member(j, "frequency", path), path + ".frequency");
    const double phase = j.contains("phase") ? as_number(j["phase"], path + ".phase") : 0.0;
    return TimeFunction::sinusoid(amplitude, frequency, phase);
  }
  if (type == "sum") {
    const auto& terms = require_member(j, "terms", path);
    if (!terms.is_array() || terms.empty()) {
      throw config_error(path + ".terms", "expected a non-empty array");
    }
    std::vector<TimeFunction> fns;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      fns.push_back(timefn_from_json(terms[i], path + ".terms[" + std::to_string(i) + "]"));
    }
    return TimeFunction::sum(std::move(fns));
  }
  if (type == "product") {
    const auto& factors = require_member(j, "factors", path);
    if (!factors.is_array() || factors.size() < 2) {
      throw config_error(path + ".factors", "expected an array of at least two factors");
    }
    TimeFunction acc =
        timefn_from_json(factors[0], path + ".factors[0]");
    for (std::size_t i = 1; i < factors.size(); ++i) {
      acc = TimeFunction::product(
          std::move(acc), timefn_from_json(factors[i], path + ".factors[" + std::to_string(i) + "]"));
    }
    return acc;
  }
  if (type == "scaled") {
    return TimeFunction::scaled(
        as_number(require_member(j, "factor", path), path + ".factor"),
        timefn_from_json(require_member(j, "inner", path), path + ".inner"));
  }
  throw config_error(path + ".type", "unknown time-function type '" + type + "'");
}

// Complex vector: either a plain array (real) or {"real": [...], "imag": [...]}.
inline Eigen::VectorXcd complex_vector_from_json(const nlohmann::json& j,
                                                 const std::string& path) {
  std::vector<double> re;
  std::vector<double> im;
  if (j.is_array()) {
    re = as_real_array(j, path);
    im.assign(re.size(), 0.0);
  } else if (j.is_object()) {
    re = as_real_array(require_member(j, "real", path), path + ".real");
    im = j.contains("imag") ? as_real_array(j["imag"], path + ".imag")
                            : std::vector<double>(re.size(), 0.0);
    if (im.size() != re.size()) {
      throw config_error(path + ".imag", "length must match 'real'");
    }
  } else {
    throw config_error(path, "expected an array or {real, imag} object");
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v[static_cast<Eigen::Index>(i)] = {re[i], im[i]};
  return v;
}

inline Eigen::MatrixXcd complex_matrix_from_json(const nlohmann::json& j,
                                                 const std::string& path, int n) {
  auto read_rows = [&](const nlohmann::json& rows, const std::string& rows_path) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw config_error(rows_path, "expected " + std::to_string(n) + " rows");
    }
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r) {
      const auto row = as_real_array(rows[r], rows_path + "[" + std::to_string(r) + "]");
      if (static_cast<int>(row.size()) != n) {
        throw config_error(rows_path + "[" + std::to_string(r) + "]",
                           "expected " + std::to_string(n) + " entries");
      }
      for (int c = 0; c < n; ++c) m(r, c) = row[c];
    }
    return m;
  };
  if (!j.is_object()) throw config_error(path, "expected a {real, imag} object");
  const Eigen::MatrixXd re = read_rows(require_member(j, "real", path), path + ".real");
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(n, n);
  if (j.contains("imag")) im = read_rows(j["imag"], path + ".imag");
  Eigen::MatrixXcd m(n, n);
  m.real() = re;
  m.imag() = im;
  return m;
}

inline std::string fmt_sig(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

}  // namespace detail

// Parse and validate a scenario document.  Violations carry the dotted path
// of the offending field.
inline Scenario parse_scenario(const nlohmann::json& doc) {
  using detail::as_integer;
  using detail::as_number;
  using detail::as_string;
  using detail::require_member;
  if (!doc.is_object()) throw config_error("scenario", "top level must be an object");
  Scenario s;

  // system
  const auto& system = require_member(doc, "system", "scenario");
  s.levels = as_integer(require_member(system, "levels", "system"), "system.levels");
  if (s.levels < 2) throw config_error("system.levels", "must be at least 2");
  if (system.contains("hbar")) s.hbar = as_number(system["hbar"], "system.hbar");
  if (!(s.hbar > 0.0)) throw config_error("system.hbar", "must be positive");
  if (system.contains("mu")) s.mu = as_number(system["mu"], "system.mu");
  if (!(s.mu > 0.0)) throw config_error("system.mu", "must be positive");

  // seed
  const auto& seed = require_member(doc, "seed", "scenario");
  const std::string kind = as_string(require_member(seed, "kind", "seed"), "seed.kind");
  const auto& params = require_member(seed, "parameters", "seed");
  if (kind == "constant") {
    s.seed_kind = SeedKind::constant;
    s.hamiltonian = detail::complex_matrix_from_json(
        require_member(params, "hamiltonian", "seed.parameters"),
        "seed.parameters.hamiltonian", s.levels);
  } else if (kind == "diagonal") {
    s.seed_kind = SeedKind::diagonal;
    const auto& energies = require_member(params, "energies", "seed.parameters");
    if (!energies.is_array() || static_cast<int>(energies.size()) != s.levels) {
      throw config_error("seed.parameters.energies",
                         "expected " + std::to_string(s.levels) + " entries");
    }
    for (std::size_t i = 0; i < energies.size(); ++i) {
      s.energies.push_back(detail::timefn_from_json(
          energies[i], "seed.parameters.energies[" + std::to_string(i) + "]"));
    }
  } else if (kind == "explicit-spin") {
    s.seed_kind = SeedKind::explicit_spin;
    if (s.levels != 2) {
      throw config_error("system.levels", "explicit-spin seeds require levels = 2");
    }
    s.b0 = as_number(require_member(params, "b0", "seed.parameters"), "seed.parameters.b0");
  } else {
    throw config_error("seed.kind",
                       "unknown kind '" + kind + "' (constant | diagonal | explicit-spin)");
  }
  s.psi0 = detail::complex_vector_from_json(require_member(params, "psi0", "seed.parameters"),
                                            "seed.parameters.psi0");
  if (s.psi0.size() != s.levels) {
    throw config_error("seed.parameters.psi0",
                       "expected " + std::to_string(s.levels) + " components");
  }
  if (!(s.psi0.norm() > 0.0)) throw config_error("seed.parameters.psi0", "must be non-zero");

  // gauge
  const auto& gauge = require_member(doc, "gauge", "scenario");
  const auto& alpha = require_member(gauge, "alpha", "gauge");
  const int expected_alpha = s.spin_mode() ? 3 : s.levels * s.levels;
  if (!alpha.is_array() || static_cast<int>(alpha.size()) != expected_alpha) {
    throw config_error("gauge.alpha", "expected " + std::to_string(expected_alpha) +
                                          " coordinate functions for this scenario");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    s.alpha.push_back(
        detail::timefn_from_json(alpha[i], "gauge.alpha[" + std::to_string(i) + "]"));
  }
  if (gauge.contains("sign")) {
    const auto& sign = gauge["sign"];
    if (sign.is_string()) {
      const std::string v = sign.get<std::string>();
      if (v == "auto") {
        s.sign = SignMode::automatic;
      } else if (v == "+1") {
        s.sign = SignMode::plus;
      } else if (v == "-1") {
        s.sign = SignMode::minus;
      } else {
        throw config_error("gauge.sign", "expected auto, +1, or -1");
      }
    } else if (sign.is_number_integer()) {
      const int v = sign.get<int>();
      if (v == 1) {
        s.sign = SignMode::plus;
      } else if (v == -1) {
        s.sign = SignMode::minus;
      } else {
        throw config_error("gauge.sign", "expected auto, +1, or -1");
      }
    } else {
      throw config_error("gauge.sign", "expected auto, +1, or -1");
    }
  }

  // run
  const auto& run = require_member(doc, "run", "scenario");
  s.t0 = as_number(require_member(run, "t0", "run"), "run.t0");
  s.t1 = as_number(require_member(run, "t1", "run"), "run.t1");
  if (!(s.t1 > s.t0)) throw config_error("run.t1", "must exceed run.t0");
  if (!std::isfinite(s.t0) || !std::isfinite(s.t1)) {
    throw config_error("run.t0", "window must be finite");
  }
  s.samples = as_integer(require_member(run, "samples", "run"), "run.samples");
  if (s.samples < 2) throw config_error("run.samples", "must be at least 2");

  // verify (optional)
  if (doc.contains("verify")) {
    const auto& verify = doc["verify"];
    if (!verify.is_object()) throw config_error("verify", "expected an object");
    if (verify.contains("tolerances")) {
      const auto& tol = verify["tolerances"];
      if (!tol.is_object()) throw config_error("verify.tolerances", "expected an object");
      auto set = [&tol](const char* key, double& slot) {
        if (tol.contains(key)) {
          slot = as_number(tol[key], std::string("verify.tolerances.") + key);
          if (!(slot > 0.0)) {
            throw config_error(std::string("verify.tolerances.") + key, "must be positive");
          }
        }
      };
      set("residual", s.certify_options.tolerances.residual);
      set("fidelity", s.certify_options.tolerances.fidelity);
      set("norm", s.certify_options.tolerances.norm);
      set("rtol", s.certify_options.tolerances.rtol);
      set("atol", s.certify_options.tolerances.atol);
    }
    if (verify.contains("grids")) {
      const auto& grids = verify["grids"];
      if (!grids.is_object()) throw config_error("verify.grids", "expected an object");
      if (grids.contains("residual_points")) {
        s.certify_options.residual_grid_points =
            as_integer(grids["residual_points"], "verify.grids.residual_points");
        if (s.certify_options.residual_grid_points < 2) {
          throw config_error("verify.grids.residual_points", "must be at least 2");
        }
      }
      if (grids.contains("fidelity_checkpoints")) {
        s.certify_options.fidelity_checkpoints =
            as_integer(grids["fidelity_checkpoints"], "verify.grids.fidelity_checkpoints");
        if (s.certify_options.fidelity_checkpoints < 2) {
          throw config_error("verify.grids.fidelity_checkpoints", "must be at least 2");
        }
      }
    }
  }

  // outputs (optional)
  if (doc.contains("outputs")) {
    const auto& outputs = doc["outputs"];
    if (!outputs.is_object()) throw config_error("outputs", "expected an object");
    if (outputs.contains("trajectory")) {
      s.outputs.trajectory = as_string(outputs["trajectory"], "outputs.trajectory");
      if (s.outputs.trajectory.empty()) {
        throw config_error("outputs.trajectory", "must be non-empty");
      }
    }
    if (outputs.contains("report")) {
      s.outputs.report = as_string(outputs["report"], "outputs.report");
      if (s.outputs.report.empty()) throw config_error("outputs.report", "must be non-empty");
    }
    if (outputs.contains("precision")) {
      s.outputs.precision = as_integer(outputs["precision"], "outputs.precision");
      if (s.outputs.precision < 1 || s.outputs.precision > 17) {
        throw config_error("outputs.precision", "must be between 1 and 17");
      }
    }
  }
  return s;
}

// Spin-mode extras kept alongside the pair so field components can be
// tabulated next to the state.
struct SpinContext {
  FieldPath seed_field;
  FieldPath transformed_field;
};

struct BuiltScenario {
  SolutionPair pair;
  std::optional<SpinContext> spin;
  int sign_used = 0;  // resolved last-term sign in spin mode; 0 otherwise
  Interval window;
};

// Construct the (connection, state) pair a scenario describes: seed solution
// plus gauge transformation.  Spin scenarios go through the closed-form
// field route, so a wrong sign choice shows up as a certification failure.
inline BuiltScenario build_scenario(const Scenario& s) {
  const Interval window{s.t0, s.t1};
  if (s.spin_mode()) {
    const VectorTimeFunction field_components{TimeFunction::constant(0.0),
                                              TimeFunction::constant(0.0),
                                              TimeFunction::constant(s.b0)};
    const FieldPath seed_field(field_components, s.mu);

    Eigen::Matrix2cd h0 = Eigen::Matrix2cd::Zero();
    h0(0, 0) = -0.5 * s.hbar * s.mu * s.b0;
    h0(1, 1) = 0.5 * s.hbar * s.mu * s.b0;
    const auto seed = seed_constant(h0, s.psi0, window, s.hbar);

    const int sign = s.sign == SignMode::automatic
                         ? resolve_sign_convention()
                         : (s.sign == SignMode::plus ? +1 : -1);
    const VectorTimeFunction alpha(s.alpha);
    const FieldPath transformed_field = b_prime_closed_form(seed_field, alpha, sign);
    const auto g = GroupPath::axis_angle(alpha, +1, su2_basis());
    SolutionPair pair{field_to_connection(transformed_field),
                      gauge_transform_state(seed.state, g), PairProvenance::gauge_transformed,
                      g};
    return BuiltScenario{std::move(pair), SpinContext{seed_field, transformed_field}, sign,
                         window};
  }

  SolutionPair seed = s.seed_kind == SeedKind::constant
                          ? seed_constant(s.hamiltonian, s.psi0, window, s.hbar)
                          : seed_diagonal(s.energies, s.psi0, window, s.hbar);
  // On the matrix route the exponent orientation is part of the user's path,
  // not a convention to resolve; "auto" means the printed exponential.
  const int sign = s.sign == SignMode::minus ? -1 : +1;
  const auto g = GroupPath::axis_angle(VectorTimeFunction(s.alpha), sign,
                                       un_basis(s.levels));
  return BuiltScenario{gauge_transform_pair(seed, g), std::nullopt, 0, window};
}

// Write the trajectory table for a generic pair: time, connection
// coefficients, state components, adjoint mean values.
inline void emit_trajectory(const SolutionPair& pair, const std::vector<double>& grid,
                            int precision, std::ostream& os) {
  if (grid.empty()) throw invalid_argument_error("emit_trajectory: grid must be non-empty");
  const int m = pair.connection.basis().dim();
  const int n = pair.connection.dimension();
  os << "t";
  for (int i = 1; i <= m; ++i) os << ",a" << i;
  for (int i = 1; i <= n; ++i) os << ",re_psi" << i << ",im_psi" << i;
  for (int i = 1; i <= m; ++i) os << ",lambda" << i;
  os << "\n";
  const AdjointTrajectory traj = mean_values(pair);
  for (double t : grid) {
    os << detail::fmt_sig(t, precision);
    const Eigen::VectorXd a = pair.connection.coefficients(t);
    for (int i = 0; i < m; ++i) os << "," << detail::fmt_sig(a[i], precision);
    const Eigen::VectorXcd psi = pair.state.value(t);
    for (int i = 0; i < n; ++i) {
      os << "," << detail::fmt_sig(psi[i].real(), precision) << ","
         << detail::fmt_sig(psi[i].imag(), precision);
    }
    const Eigen::VectorXd lam = traj.value(t);
    for (int i = 0; i < m; ++i) os << "," << detail::fmt_sig(lam[i], precision);
    os << "\n";
  }
}

// Spin-mode table: seed field, transformed field, state, Bloch vector.
inline void emit_trajectory(const BuiltScenario& built, const std::vector<double>& grid,
                            int precision, std::ostream& os) {
  if (!built.spin) {
    emit_trajectory(built.pair, grid, precision, os);
    return;
  }
  if (grid.empty()) throw invalid_argument_error("emit_trajectory: grid must be non-empty");
  os << "t,Bx,By,Bz,Bpx,Bpy,Bpz,re_psi1,im_psi1,re_psi2,im_psi2,nx,ny,nz\n";
  for (double t : grid) {
    os << detail::fmt_sig(t, precision);
    const Eigen::Vector3d b = built.spin->seed_field.value(t);
    for (int i = 0; i < 3; ++i) os << "," << detail::fmt_sig(b[i], precision);
    const Eigen::Vector3d bp = built.spin->transformed_field.value(t);
    for (int i = 0; i < 3; ++i) os << "," << detail::fmt_sig(bp[i], precision);
    const Eigen::VectorXcd psi = built.pair.state.value(t);
    for (int i = 0; i < 2; ++i) {
      os << "," << detail::fmt_sig(psi[i].real(), precision) << ","
         << detail::fmt_sig(psi[i].imag(), precision);
    }
    const Eigen::Vector3d n = bloch_vector(psi).n;
    for (int i = 0; i < 3; ++i) os << "," << detail::fmt_sig(n[i], precision);
    os << "\n";
  }
}

// Serialize a certification report with sorted keys; non-finite metrics
// become JSON null.
inline nlohmann::json report_to_json(const CertificationReport& r) {
  nlohmann::json j;
  j["diagnostic"] = r.diagnostic;
  j["grid"] = r.grid;
  j["max_schrodinger_residual"] = r.max_schrodinger_residual;
  j["min_fidelity"] = r.min_fidelity;
  j["norm_drift"] = r.norm_drift;
  j["pass"] = r.pass;
  j["sign_convention_used"] = r.sign_convention_used;
  j["tolerances"] = {{"atol", r.tolerances.atol},
                     {"fidelity", r.tolerances.fidelity},
                     {"norm", r.tolerances.norm},
                     {"residual", r.tolerances.residual},
                     {"rtol", r.tolerances.rtol}};
  return j;
}

// Command-level options layered over the scenario document.
struct RunOptions {
  std::optional<int> grid_points;   // override verify.grids.residual_points
  std::optional<double> rtol;       // override verify.tolerances.rtol
  std::optional<double> atol;       // override verify.tolerances.atol
  std::string output_dir;           // empty: resolve relative outputs in cwd
  bool write_trajectory = true;     // false: report only
};

// Full pipeline for one scenario file.  Returns the process exit code:
// 0 certified, 1 config/I-O error, 2 certification failure.
inline int run_scenario(const std::string& config_path, const RunOptions& options = {},
                        std::ostream& diag = std::cerr) {
  namespace fs = std::filesystem;
  Scenario scenario;
  try {
    std::ifstream in(config_path);
    if (!in) {
      throw config_error("config", "cannot open '" + config_path + "'");
    }
    const nlohmann::json doc = nlohmann::json::parse(in, nullptr, true, true);
    scenario = parse_scenario(doc);
  } catch (const nlohmann::json::exception& e) {
    diag << "config error in " << config_path << ": " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    diag << config_path << ": " << e.what() << "\n";
    return 1;
  }

  try {
    const BuiltScenario built = build_scenario(scenario);
    CertifyOptions certify_options = scenario.certify_options;
    if (options.grid_points) certify_options.residual_grid_points = *options.grid_points;
    if (options.rtol) certify_options.tolerances.rtol = *options.rtol;
    if (options.atol) certify_options.tolerances.atol = *options.atol;

    CertificationReport report = certify(built.pair, built.window, certify_options);
    if (built.spin) report.sign_convention_used = built.sign_used;

    const fs::path outdir =
        options.output_dir.empty() ? fs::path() : fs::path(options.output_dir);
    if (!outdir.empty()) fs::create_directories(outdir);
    auto resolve = [&outdir](const std::string& name) {
      const fs::path p(name);
      return (p.is_absolute() || outdir.empty()) ? p : outdir / p;
    };

    if (options.write_trajectory) {
      const fs::path path = resolve(scenario.outputs.trajectory);
      std::ofstream out(path);
      if (!out) {
        diag << "i/o error: cannot write trajectory file " << path.string() << "\n";
        return 1;
      }
      emit_trajectory(built, linspace(scenario.t0, scenario.t1, scenario.samples),
                      scenario.outputs.precision, out);
    }
    {
      const fs::path path = resolve(scenario.outputs.report);
      std::ofstream out(path);
      if (!out) {
        diag << "i/o error: cannot write report file " << path.string() << "\n";
        return 1;
      }
      out << report_to_json(report).dump(2) << "\n";
    }

    if (!report.pass) {
      diag << config_path << ": certification FAILED (max residual "
           << detail::fmt_g(report.max_schrodinger_residual) << ", min fidelity "
           << detail::fmt_g(report.min_fidelity) << ", norm drift "
           << detail::fmt_g(report.norm_drift) << ")";
      if (!report.diagnostic.empty()) diag << ": " << report.diagnostic;
      diag << "\n";
      return 2;
    }
    return 0;
  } catch (const error& e) {
    diag << config_path << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gaugekit

#endif  // GAUGEKIT_SCENARIO_HPP_
