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

#ifndef SPECSHARE_EXPERIMENTS_HPP
#define SPECSHARE_EXPERIMENTS_HPP

#include "specshare/welfare.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace specshare::experiments {

using channel::Topology;
using channel::UnitFading;
using rates::SystemParams;

/// Monte Carlo configuration. A sweep, when present, names either a distance
/// field of Topology (e.g. "d_st_sr") or "antennas"; every sweep value reuses
/// the per-trial fading draw, so comparisons across values are paired.
struct ExperimentConfig {
  SystemParams params;
  Topology topology;
  int realizations = 10000;
  std::uint64_t base_seed = 1;
  double grid_step = 1e-3;
  std::string sweep_parameter;  // empty: no sweep
  std::vector<double> sweep_values;

  void validate() const;  // throws std::invalid_argument
};

/// Everything the three schemes produce for one channel realization.
struct TrialRecord {
  bool skipped = false;        // degenerate channel draw, logged and excluded
  game::Equilibrium equilibrium;
  double alpha_nc = 0.0;       // non-cooperative optimum, shared channel
  double utility_p_nc = 0.0;
  double utility_s_nc = 0.0;
  double welfare_nc = 0.0;
  double welfare_game = 0.0;
  welfare::WelfareResult centralized;
};

/// Per-sweep-value aggregate means.
struct SweepPoint {
  double sweep_value = 0.0;
  double mean_utility_p_game = 0.0;
  double mean_utility_p_nc = 0.0;
  double mean_utility_s_game = 0.0;
  double mean_utility_s_nc = 0.0;
  double mean_welfare_game = 0.0;
  double mean_welfare_nc = 0.0;
  double mean_welfare_centralized = 0.0;
  double coop_mode_frequency = 0.0;
  int trials_used = 0;
  int trials_skipped = 0;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepPoint> points;
};

/// Deterministic per-trial seed derived from (base_seed, trial_index).
std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index);

/// Runs all three schemes on one explicit fading draw (after path-loss
/// scaling by the config topology).
TrialRecord run_trial(const ExperimentConfig& config, const UnitFading& fading);

/// Draws the trial's own fading from (base_seed, trial_index) and runs it.
TrialRecord run_trial(const ExperimentConfig& config, int trial_index);

/// Arithmetic means over the non-skipped records; throws std::invalid_argument
/// on an empty set and std::runtime_error if every record was skipped.
SweepPoint aggregate(const std::vector<TrialRecord>& records, double sweep_value);

/// Paired sweep: per trial index one fading draw (at the largest antenna
/// count for antenna sweeps, truncated per value) shared across all sweep
/// values. Without a sweep, returns a single point tagged with value 0.
/// When records_out is non-null it receives every per-trial record, one
/// inner vector per sweep value.
SweepResult run_sweep(const ExperimentConfig& config,
                      std::vector<std::vector<TrialRecord>>* records_out = nullptr);

}  // namespace specshare::experiments

#endif  // SPECSHARE_EXPERIMENTS_HPP
