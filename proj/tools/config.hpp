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

#ifndef SPECSHARE_TOOLS_CONFIG_HPP
#define SPECSHARE_TOOLS_CONFIG_HPP

#include "specshare/experiments.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace specshare::cli {

/// Configuration or input-file problem; the message carries file:line.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// Parses the key-value experiment configuration. Power/energy keys
/// (p, e0, sigma2) accept a "dB" value suffix, converted as 10^(v/10)
/// relative to sigma^2 = 1. Required keys: p, eta, e0, lambda_p, lambda_s.
/// Everything else falls back to the built-in defaults. Throws config_error
/// with a line-numbered diagnostic.
experiments::ExperimentConfig parse_config(std::istream& in, const std::string& name);
experiments::ExperimentConfig load_config(const std::string& path);

/// Parses a fixed-channel file: one link per line, "name re im [re im ...]",
/// with names h_p, h_ps (scalars) and h_s, g_p, g_s (N >= 2 entries each).
channel::ChannelRealization parse_channel_file(std::istream& in, const std::string& name);
channel::ChannelRealization load_channel_file(const std::string& path);

/// Locale-independent number formatting with 9 significant digits.
std::string format_number(double value);

}  // namespace specshare::cli

#endif  // SPECSHARE_TOOLS_CONFIG_HPP
