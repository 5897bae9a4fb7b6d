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

#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaugekit/errors.hpp"
#include "gaugekit/scenario.hpp"
#include "gaugekit/timefn.hpp"
#include "gaugekit/verify.hpp"

namespace fs = std::filesystem;
using gaugekit::config_error;
using gaugekit::Scenario;
using gaugekit::TimeFunction;
using nlohmann::json;
using cplx = std::complex<double>;

namespace {

std::string scenario_path(const std::string& name) {
  return std::string(GAUGEKIT_SCENARIO_DIR) + "/" + name;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in, nullptr, true, true);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Fresh temporary directory, unique per call.
fs::path make_temp_dir() {
  static int counter = 0;
  const fs::path dir =
      fs::temp_directory_path() / ("gaugekit_cli_test_" + std::to_string(::getpid()) + "_" +
                                   std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// A minimal valid spin scenario that individual cases mutate.
json base_spin_doc() {
  return json::parse(R"({
    "system": {"levels": 2, "hbar": 1.0, "mu": 1.0},
    "seed": {
      "kind": "explicit-spin",
      "parameters": {"b0": 1.0, "psi0": {"real": [1.0, 0.0], "imag": [0.0, 0.0]}}
    },
    "gauge": {
      "alpha": [
        {"type": "polynomial", "coefficients": [0.0, 0.3]},
        {"type": "constant", "value": 0.0},
        {"type": "constant", "value": 0.0}
      ],
      "sign": "auto"
    },
    "run": {"t0": 0.0, "t1": 5.0, "samples": 11}
  })");
}

std::string field_of_parse_failure(const json& doc) {
  try {
    gaugekit::parse_scenario(doc);
  } catch (const config_error& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_CASE("tagged time-function nodes evaluate as specified", "[cli]") {
  auto fn = [](const char* text) {
    return gaugekit::detail::timefn_from_json(json::parse(text), "node");
  };
  CHECK(fn(R"({"type": "constant", "value": 2.5})")(1.7) == 2.5);
  const auto poly = fn(R"({"type": "polynomial", "coefficients": [1.0, -2.0, 0.5]})");
  CHECK(std::abs(poly(2.0) - (1.0 - 4.0 + 2.0)) < 1e-15);
  const auto sine = fn(R"({"type": "sinusoid", "amplitude": 2.0, "frequency": 3.0, "phase": 0.4})");
  CHECK(std::abs(sine(1.1) - 2.0 * std::sin(3.0 * 1.1 + 0.4)) < 1e-15);
  const auto total = fn(R"({"type": "sum", "terms": [
    {"type": "constant", "value": 1.0}, {"type": "polynomial", "coefficients": [0.0, 1.0]}]})");
  CHECK(std::abs(total(3.0) - 4.0) < 1e-15);
  const auto prod = fn(R"({"type": "product", "factors": [
    {"type": "constant", "value": 3.0}, {"type": "polynomial", "coefficients": [0.0, 1.0]}]})");
  CHECK(std::abs(prod(2.0) - 6.0) < 1e-15);
  const auto scaled = fn(R"({"type": "scaled", "factor": -2.0,
                             "inner": {"type": "constant", "value": 4.0}})");
  CHECK(std::abs(scaled(0.0) + 8.0) < 1e-15);

  try {
    fn(R"({"type": "wavelet"})");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(e.field() == "node.type");
  }
}

TEST_CASE("the shipped rotating-frame scenario parses with its defaults", "[cli]") {
  const Scenario s = gaugekit::parse_scenario(load_json(scenario_path("constant_to_rotating.json")));
  CHECK(s.levels == 2);
  CHECK(s.hbar == 1.0);
  CHECK(s.mu == 1.0);
  CHECK(s.spin_mode());
  CHECK(s.b0 == 1.0);
  CHECK(s.psi0.size() == 2);
  CHECK(s.alpha.size() == 3);
  CHECK(s.sign == gaugekit::SignMode::automatic);
  CHECK(std::abs(s.alpha[0](2.0) - 0.6) < 1e-15);
  CHECK(s.t0 == 0.0);
  CHECK(std::abs(s.t1 - 20.0 / 0.3) < 1e-12);
  CHECK(s.samples == 334);
  CHECK(s.certify_options.residual_grid_points == 200);
  CHECK(s.certify_options.fidelity_checkpoints == 20);
  CHECK(s.certify_options.tolerances.residual == 1e-9);
  CHECK(s.outputs.trajectory == "constant_to_rotating.csv");
  CHECK(s.outputs.report == "constant_to_rotating.report.json");
  CHECK(s.outputs.precision == 17);
}

TEST_CASE("schema violations name the offending field", "[cli]") {
  {
    json doc = base_spin_doc();
    doc["run"]["t1"] = -1.0;
    CHECK(field_of_parse_failure(doc) == "run.t1");
  }
  {
    json doc = base_spin_doc();
    doc["run"]["samples"] = 1;
    CHECK(field_of_parse_failure(doc) == "run.samples");
  }
  {
    json doc = base_spin_doc();
    doc["system"]["levels"] = 1;
    CHECK(field_of_parse_failure(doc) == "system.levels");
  }
  {
    json doc = base_spin_doc();
    doc["system"]["levels"] = 3;  // explicit-spin requires two levels
    CHECK(field_of_parse_failure(doc) == "system.levels");
  }
  {
    json doc = base_spin_doc();
    doc["seed"]["parameters"]["psi0"] = json::parse(R"({"real": [1.0, 0.0, 0.0]})");
    CHECK(field_of_parse_failure(doc) == "seed.parameters.psi0");
  }
  {
    json doc = base_spin_doc();
    doc["gauge"]["alpha"].erase(2);
    CHECK(field_of_parse_failure(doc) == "gauge.alpha");
  }
  {
    json doc = base_spin_doc();
    doc["gauge"]["sign"] = "sometimes";
    CHECK(field_of_parse_failure(doc) == "gauge.sign");
  }
  {
    json doc = base_spin_doc();
    doc["gauge"]["alpha"][0]["type"] = "mystery";
    CHECK(field_of_parse_failure(doc) == "gauge.alpha[0].type");
  }
  {
    json doc = base_spin_doc();
    doc.erase("system");
    CHECK(field_of_parse_failure(doc) == "scenario.system");
  }
  {
    json doc = base_spin_doc();
    doc["seed"]["kind"] = "диагональ";
    CHECK(field_of_parse_failure(doc) == "seed.kind");
  }
  {
    json doc = base_spin_doc();
    doc["outputs"] = json::parse(R"({"precision": 0})");
    CHECK(field_of_parse_failure(doc) == "outputs.precision");
  }
  {
    json doc = base_spin_doc();
    doc["verify"] = json::parse(R"({"tolerances": {"residual": -1.0}})");
    CHECK(field_of_parse_failure(doc) == "verify.tolerances.residual");
  }
  {
    // Diagonal seeds need one energy per level.
    json doc = base_spin_doc();
    doc["system"]["levels"] = 2;
    doc["seed"] = json::parse(R"({
      "kind": "diagonal",
      "parameters": {"energies": [{"type": "constant", "value": 1.0}],
                      "psi0": {"real": [1.0, 0.0]}}
    })");
    CHECK(field_of_parse_failure(doc) == "seed.parameters.energies");
  }
}

TEST_CASE("building the rotating-frame scenario certifies end to end", "[cli]") {
  const Scenario s = gaugekit::parse_scenario(load_json(scenario_path("constant_to_rotating.json")));
  const gaugekit::BuiltScenario built = gaugekit::build_scenario(s);
  REQUIRE(built.spin.has_value());
  CHECK(built.sign_used == gaugekit::resolve_sign_convention());
  CHECK(built.pair.provenance == gaugekit::PairProvenance::gauge_transformed);
  CHECK((built.pair.state.value(0.0) - s.psi0).norm() < 1e-14);

  const auto report = gaugekit::certify(built.pair, built.window, s.certify_options);
  CHECK(report.pass);
  CHECK(report.max_schrodinger_residual < 1e-9);
}

TEST_CASE("spin trajectories carry the documented columns", "[cli]") {
  const Scenario s = gaugekit::parse_scenario(load_json(scenario_path("constant_to_rotating.json")));
  const gaugekit::BuiltScenario built = gaugekit::build_scenario(s);
  std::ostringstream out;
  const auto grid = gaugekit::linspace(s.t0, s.t1, 5);
  gaugekit::emit_trajectory(built, grid, s.outputs.precision, out);

  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "t,Bx,By,Bz,Bpx,Bpy,Bpz,re_psi1,im_psi1,re_psi2,im_psi2,nx,ny,nz");

  // First data row: t = 0, seed field along k-hat, spin-up Bloch vector.
  const auto first = split_csv(rows[1]);
  REQUIRE(first.size() == 14);
  CHECK(std::stod(first[0]) == 0.0);
  CHECK(std::stod(first[1]) == 0.0);
  CHECK(std::stod(first[2]) == 0.0);
  CHECK(std::stod(first[3]) == 1.0);
  const Eigen::Vector3d bp0 = built.spin->transformed_field.value(0.0);
  CHECK(std::stod(first[4]) == bp0[0]);
  CHECK(std::stod(first[5]) == bp0[1]);
  CHECK(std::stod(first[6]) == bp0[2]);
  CHECK(std::stod(first[7]) == 1.0);   // re psi1
  CHECK(std::stod(first[8]) == 0.0);   // im psi1
  CHECK(std::stod(first[11]) == 0.0);  // nx
  CHECK(std::stod(first[12]) == 0.0);  // ny
  CHECK(std::stod(first[13]) == 1.0);  // nz
}

TEST_CASE("emitted numbers round-trip to the evaluated pair", "[cli]") {
  const Scenario s = gaugekit::parse_scenario(load_json(scenario_path("constant_to_rotating.json")));
  const gaugekit::BuiltScenario built = gaugekit::build_scenario(s);
  std::ostringstream out;
  const auto grid = gaugekit::linspace(s.t0, s.t1, 9);
  gaugekit::emit_trajectory(built, grid, 17, out);

  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 10);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto cols = split_csv(rows[r]);
    REQUIRE(cols.size() == 14);
    const double t = std::stod(cols[0]);
    CHECK(t == grid[r - 1]);  // 17 significant digits reproduce the double exactly
    const Eigen::Vector3d bp = built.spin->transformed_field.value(t);
    for (int i = 0; i < 3; ++i) CHECK(std::stod(cols[4 + i]) == bp[i]);
    const Eigen::VectorXcd psi = built.pair.state.value(t);
    CHECK(std::stod(cols[7]) == psi[0].real());
    CHECK(std::stod(cols[8]) == psi[0].imag());
    CHECK(std::stod(cols[9]) == psi[1].real());
    CHECK(std::stod(cols[10]) == psi[1].imag());
    const Eigen::Vector3d n = gaugekit::bloch_vector(psi).n;
    for (int i = 0; i < 3; ++i) CHECK(std::stod(cols[11 + i]) == n[i]);
  }
}

TEST_CASE("general trajectories tabulate coefficients, state, and mean values", "[cli]") {
  const Scenario s =
      gaugekit::parse_scenario(load_json(scenario_path("three_level_diagonal.json")));
  const gaugekit::BuiltScenario built = gaugekit::build_scenario(s);
  REQUIRE_FALSE(built.spin.has_value());
  std::ostringstream out;
  const auto grid = gaugekit::linspace(s.t0, s.t1, 4);
  gaugekit::emit_trajectory(built, grid, 17, out);
  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 5);

  // 1 + 9 coefficients + 6 state columns + 9 mean values.
  const auto header = split_csv(rows[0]);
  REQUIRE(header.size() == 25);
  CHECK(header[0] == "t");
  CHECK(header[1] == "a1");
  CHECK(header[9] == "a9");
  CHECK(header[10] == "re_psi1");
  CHECK(header[15] == "im_psi3");
  CHECK(header[16] == "lambda1");
  CHECK(header[24] == "lambda9");

  const auto traj = gaugekit::mean_values(built.pair);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto cols = split_csv(rows[r]);
    REQUIRE(cols.size() == 25);
    const double t = std::stod(cols[0]);
    const Eigen::VectorXd a = built.pair.connection.coefficients(t);
    for (int i = 0; i < 9; ++i) CHECK(std::stod(cols[1 + i]) == a[i]);
    const Eigen::VectorXd lam = traj.value(t);
    for (int i = 0; i < 9; ++i) CHECK(std::stod(cols[16 + i]) == lam[i]);
  }
}

TEST_CASE("run_scenario writes deterministic outputs and exits 0 on pass", "[cli]") {
  const fs::path dir_a = make_temp_dir();
  const fs::path dir_b = make_temp_dir();
  gaugekit::RunOptions options;
  std::ostringstream diag;

  options.output_dir = dir_a.string();
  const int code_a =
      gaugekit::run_scenario(scenario_path("constant_to_rotating.json"), options, diag);
  options.output_dir = dir_b.string();
  const int code_b =
      gaugekit::run_scenario(scenario_path("constant_to_rotating.json"), options, diag);
  CHECK(code_a == 0);
  CHECK(code_b == 0);

  const std::string traj_a = read_file(dir_a / "constant_to_rotating.csv");
  const std::string traj_b = read_file(dir_b / "constant_to_rotating.csv");
  CHECK(traj_a == traj_b);  // byte-identical
  CHECK(traj_a.size() > 1000);

  const std::string report_text = read_file(dir_a / "constant_to_rotating.report.json");
  CHECK(report_text == read_file(dir_b / "constant_to_rotating.report.json"));
  const json report = json::parse(report_text);
  CHECK(report["pass"].get<bool>());
  CHECK(report["max_schrodinger_residual"].get<double>() < 1e-9);
  CHECK(report["min_fidelity"].get<double>() > 1.0 - 1e-8);
  CHECK(report["norm_drift"].get<double>() < 1e-10);
  CHECK(report["sign_convention_used"].get<int>() == gaugekit::resolve_sign_convention());
  CHECK(report["grid"].size() >= 200);

  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}

TEST_CASE("a pinned wrong sign fails certification with exit code 2", "[cli]") {
  const fs::path dir = make_temp_dir();
  gaugekit::RunOptions options;
  options.output_dir = dir.string();
  std::ostringstream diag;
  const int code =
      gaugekit::run_scenario(scenario_path("constant_to_rotating_sign_plus.json"), options, diag);
  CHECK(code == 2);
  CHECK(diag.str().find("certification FAILED") != std::string::npos);

  const json report = json::parse(read_file(dir / "constant_to_rotating_sign_plus.report.json"));
  CHECK_FALSE(report["pass"].get<bool>());
  CHECK(report["max_schrodinger_residual"].get<double>() > 1e-3);
  fs::remove_all(dir);
}

TEST_CASE("config problems exit with code 1 and name the field", "[cli]") {
  const fs::path dir = make_temp_dir();

  {
    json doc = base_spin_doc();
    doc["run"]["t1"] = -2.0;
    const fs::path bad = dir / "bad_window.json";
    std::ofstream(bad) << doc.dump(2);
    std::ostringstream diag;
    CHECK(gaugekit::run_scenario(bad.string(), {}, diag) == 1);
    CHECK(diag.str().find("run.t1") != std::string::npos);
  }
  {
    std::ostringstream diag;
    CHECK(gaugekit::run_scenario((dir / "missing.json").string(), {}, diag) == 1);
    CHECK_FALSE(diag.str().empty());
  }
  {
    const fs::path mangled = dir / "mangled.json";
    std::ofstream(mangled) << "{ not json";
    std::ostringstream diag;
    CHECK(gaugekit::run_scenario(mangled.string(), {}, diag) == 1);
    CHECK_FALSE(diag.str().empty());
  }
  fs::remove_all(dir);
}

TEST_CASE("certify-only runs skip the trajectory file", "[cli]") {
  const fs::path dir = make_temp_dir();
  gaugekit::RunOptions options;
  options.output_dir = dir.string();
  options.write_trajectory = false;
  options.grid_points = 60;  // also exercise the override path
  std::ostringstream diag;
  const int code =
      gaugekit::run_scenario(scenario_path("constant_to_rotating.json"), options, diag);
  CHECK(code == 0);
  CHECK_FALSE(fs::exists(dir / "constant_to_rotating.csv"));
  const json report = json::parse(read_file(dir / "constant_to_rotating.report.json"));
  CHECK(report["pass"].get<bool>());
  CHECK(report["grid"].size() >= 60);
  fs::remove_all(dir);
}

TEST_CASE("the general-route scenario certifies and runs clean", "[cli]") {
  const fs::path dir = make_temp_dir();
  gaugekit::RunOptions options;
  options.output_dir = dir.string();
  std::ostringstream diag;
  const int code =
      gaugekit::run_scenario(scenario_path("three_level_diagonal.json"), options, diag);
  CHECK(code == 0);
  const json report = json::parse(read_file(dir / "three_level_diagonal.report.json"));
  CHECK(report["pass"].get<bool>());
  CHECK(report["max_schrodinger_residual"].get<double>() < 1e-9);
  CHECK(report["sign_convention_used"].get<int>() == 0);
  const std::string traj = read_file(dir / "three_level_diagonal.csv");
  CHECK(traj.rfind("t,a1,", 0) == 0);
  fs::remove_all(dir);
}
