// Copyright 2026 The specshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using specshare::cli::Options;

  CLI::App app{"Stackelberg spectrum-sharing simulator for an RF-powered "
               "cognitive radio network"};
  app.require_subcommand(1);

  Options options;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", options.config_path, "Configuration file path");
    cmd->add_option("--seed", options.seed, "Base seed override");
    cmd->add_option("--trials", options.trials, "Realization count override");
    cmd->add_option("--grid-step", options.grid_step, "Search grid step override");
    cmd->add_option("--output", options.output_path, "Output path (default stdout)");
  };

  auto* equilibrium = app.add_subcommand(
      "equilibrium", "Solve one realization and report the equilibrium");
  add_common(equilibrium);
  equilibrium->add_option("--channel-file", options.channel_path,
                          "Fixed channel realization file");

  auto* sweep = app.add_subcommand(
      "sweep", "Monte Carlo sweep; emits one CSV row per sweep value");
  add_common(sweep);
  sweep->add_option("--dump", options.dump_path, "Per-realization dump CSV path");

  auto* validate = app.add_subcommand(
      "validate", "Run the oracle-equivalence and invariant suites");
  add_common(validate);
  validate->add_option("--suites", options.suites,
                       "Only run the named suites (zf, follower, leader, "
                       "identities, dominance)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? specshare::cli::kExitOk : specshare::cli::kExitConfigError;
  }

  try {
    if (equilibrium->parsed()) return specshare::cli::cmd_equilibrium(options);
    if (sweep->parsed()) return specshare::cli::cmd_sweep(options);
    return specshare::cli::cmd_validate(options);
  } catch (const specshare::cli::config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return specshare::cli::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return specshare::cli::kExitConfigError;
  }
}
