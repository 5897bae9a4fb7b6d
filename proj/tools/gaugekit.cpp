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

// Command-line scenario runner.
//
//   gaugekit run <config>...       build, certify, write trajectory + report
//   gaugekit certify <config>...   build and certify, write report only
//   gaugekit resolve-sign          print the oracle-resolved last-term sign
//
// Exit codes: 0 success, 1 usage/config error, 2 certification failure.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gaugekit/errors.hpp"
#include "gaugekit/scenario.hpp"
#include "gaugekit/verify.hpp"

namespace {

// Run every scenario file, possibly concurrently; print diagnostics in input
// order and return the worst exit code.
int run_all(const std::vector<std::string>& configs, const gaugekit::RunOptions& options,
            int jobs) {
  const std::size_t count = configs.size();
  std::vector<int> codes(count, 0);
  std::vector<std::string> logs(count);

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      std::ostringstream log;
      codes[i] = gaugekit::run_scenario(configs[i], options, log);
      logs[i] = log.str();
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          std::ostringstream log;
          codes[i] = gaugekit::run_scenario(configs[i], options, log);
          logs[i] = log.str();
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  int worst = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!logs[i].empty()) std::cerr << logs[i];
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and certify exact solutions of driven n-level systems"};
  app.require_subcommand(1);

  std::vector<std::string> configs;
  int grid_points = 0;
  double rtol = 0.0;
  double atol = 0.0;
  int jobs = 1;
  std::string output_dir;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("configs", configs, "Scenario files (JSON)")->required()->expected(-1);
    cmd->add_option("--grid", grid_points, "Residual grid points (overrides the scenario)")
        ->check(CLI::Range(2, 1000000));
    cmd->add_option("--rtol", rtol, "Oracle relative tolerance override")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--atol", atol, "Oracle absolute tolerance override")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", jobs, "Run up to K scenario files concurrently")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--output-dir", output_dir,
                    "Directory for relative output paths (created if missing)")
        ->envname("GAUGEKIT_OUTPUT_DIR");
  };

  CLI::App* cmd_run = app.add_subcommand("run", "Build, certify, and write trajectory + report");
  add_common(cmd_run);
  CLI::App* cmd_certify =
      app.add_subcommand("certify", "Build and certify, writing the report only");
  add_common(cmd_certify);
  CLI::App* cmd_sign = app.add_subcommand(
      "resolve-sign", "Print the sign of the inhomogeneous term resolved by the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (cmd_sign->parsed()) {
    try {
      std::printf("%+d\n", gaugekit::resolve_sign_convention());
      return 0;
    } catch (const gaugekit::error& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  gaugekit::RunOptions options;
  const CLI::App* active = cmd_run->parsed() ? cmd_run : cmd_certify;
  if (active->count("--grid") > 0) options.grid_points = grid_points;
  if (active->count("--rtol") > 0) options.rtol = rtol;
  if (active->count("--atol") > 0) options.atol = atol;
  options.output_dir = output_dir;
  options.write_trajectory = cmd_run->parsed();
  return run_all(configs, options, jobs);
}
