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

#ifndef SPECSHARE_TOOLS_COMMANDS_HPP
#define SPECSHARE_TOOLS_COMMANDS_HPP

#include "config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace specshare::cli {

/// Options shared by the subcommands; unset optionals keep config values.
struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<double> grid_step;
  std::string output_path;   // empty: stdout
  std::string channel_path;  // equilibrium: fixed-channel file
  std::string dump_path;     // sweep: optional per-realization dump CSV
  std::vector<std::string> suites;  // validate: filter
};

/// Exit codes: 0 success, 1 validation-suite failure, 2 configuration error.
constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitConfigError = 2;

int cmd_equilibrium(const Options& options);
int cmd_sweep(const Options& options);
int cmd_validate(const Options& options);

}  // namespace specshare::cli

#endif  // SPECSHARE_TOOLS_COMMANDS_HPP
