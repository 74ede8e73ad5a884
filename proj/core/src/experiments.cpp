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

#include "specshare/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specshare::experiments {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool is_distance_sweep(const std::string& name) {
  return name == "d_st_sr" || name == "d_pt_pr" || name == "d_pt_st" ||
         name == "d_st_pr" || name == "d_pt_sr";
}

void set_distance(Topology& topo, const std::string& name, double value) {
  if (name == "d_st_sr") topo.d_st_sr = value;
  else if (name == "d_pt_pr") topo.d_pt_pr = value;
  else if (name == "d_pt_st") topo.d_pt_st = value;
  else if (name == "d_st_pr") topo.d_st_pr = value;
  else topo.d_pt_sr = value;
}

}  // namespace

void ExperimentConfig::validate() const {
  params.validate();
  topology.validate();
  if (realizations < 1) {
    throw std::invalid_argument("experiment: realizations must be >= 1");
  }
  if (!(grid_step > 0.0 && grid_step <= 0.01)) {
    throw std::invalid_argument("experiment: grid_step must lie in (0, 0.01]");
  }
  if (!sweep_parameter.empty()) {
    if (!is_distance_sweep(sweep_parameter) && sweep_parameter != "antennas") {
      throw std::invalid_argument("experiment: unknown sweep parameter '" +
                                  sweep_parameter + "'");
    }
    if (sweep_values.empty()) {
      throw std::invalid_argument("experiment: sweep value list is empty");
    }
    if (!std::is_sorted(sweep_values.begin(), sweep_values.end())) {
      throw std::invalid_argument("experiment: sweep values must be sorted");
    }
    if (sweep_parameter == "antennas") {
      for (double v : sweep_values) {
        if (v < 2.0 || v != std::floor(v)) {
          throw std::invalid_argument("experiment: antenna counts must be integers >= 2");
        }
      }
    } else {
      for (double v : sweep_values) {
        if (!(v > 0.0)) throw std::invalid_argument("experiment: distances must be > 0");
      }
    }
  }
}

std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index) {
  return splitmix64(splitmix64(base_seed) ^
                    (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial_index + 1)));
}

TrialRecord run_trial(const ExperimentConfig& config, const UnitFading& fading) {
  TrialRecord rec;
  channel::EffectiveGains gains;
  try {
    gains = channel::effective_gains(channel::apply_topology(fading, config.topology));
  } catch (const channel::degenerate_channel_error&) {
    rec.skipped = true;
    return rec;
  }
  rec.equilibrium = game::stackelberg_equilibrium(config.params, gains, config.grid_step);
  rec.alpha_nc = rec.equilibrium.alpha_star;
  rec.utility_p_nc = game::utility_p_nc(config.params, gains);
  rec.utility_s_nc = game::utility_s_nc(rec.alpha_nc, config.params, gains);
  rec.welfare_nc = rec.utility_p_nc + rec.utility_s_nc;
  rec.welfare_game = config.params.lambda_p * rec.equilibrium.rate_p +
                     config.params.lambda_s * rec.equilibrium.rate_s;
  rec.centralized = welfare::centralized_optimum(config.params, gains, config.grid_step);
  return rec;
}

TrialRecord run_trial(const ExperimentConfig& config, int trial_index) {
  if (trial_index < 0 || trial_index >= config.realizations) {
    throw std::invalid_argument("run_trial: trial index out of range");
  }
  std::mt19937_64 rng(trial_seed(config.base_seed, trial_index));
  const UnitFading fading = channel::sample_unit_fading(config.params.antennas, rng);
  return run_trial(config, fading);
}

SweepPoint aggregate(const std::vector<TrialRecord>& records, double sweep_value) {
  if (records.empty()) throw std::invalid_argument("aggregate: empty record set");
  SweepPoint point;
  point.sweep_value = sweep_value;
  for (const TrialRecord& rec : records) {
    if (rec.skipped) {
      ++point.trials_skipped;
      continue;
    }
    ++point.trials_used;
    point.mean_utility_p_game += rec.equilibrium.utility_p;
    point.mean_utility_p_nc += rec.utility_p_nc;
    point.mean_utility_s_game += rec.equilibrium.utility_s;
    point.mean_utility_s_nc += rec.utility_s_nc;
    point.mean_welfare_game += rec.welfare_game;
    point.mean_welfare_nc += rec.welfare_nc;
    point.mean_welfare_centralized += rec.centralized.welfare;
    if (rec.equilibrium.mode == game::Mode::cooperative) {
      point.coop_mode_frequency += 1.0;
    }
  }
  if (point.trials_used == 0) {
    throw std::runtime_error("aggregate: every trial was skipped");
  }
  const double n = point.trials_used;
  point.mean_utility_p_game /= n;
  point.mean_utility_p_nc /= n;
  point.mean_utility_s_game /= n;
  point.mean_utility_s_nc /= n;
  point.mean_welfare_game /= n;
  point.mean_welfare_nc /= n;
  point.mean_welfare_centralized /= n;
  point.coop_mode_frequency /= n;
  return point;
}

SweepResult run_sweep(const ExperimentConfig& config,
                      std::vector<std::vector<TrialRecord>>* records_out) {
  config.validate();
  SweepResult result;
  result.parameter = config.sweep_parameter;

  std::vector<double> values = config.sweep_values;
  if (config.sweep_parameter.empty()) values = {0.0};

  const bool antenna_sweep = config.sweep_parameter == "antennas";
  int draw_antennas = config.params.antennas;
  if (antenna_sweep) {
    draw_antennas = static_cast<int>(*std::max_element(values.begin(), values.end()));
  }

  std::vector<std::vector<TrialRecord>> per_value(values.size());
  for (auto& v : per_value) v.reserve(config.realizations);

  for (int trial = 0; trial < config.realizations; ++trial) {
    // One draw per trial index; every sweep value sees the same fading.
    std::mt19937_64 rng(trial_seed(config.base_seed, trial));
    const UnitFading fading = channel::sample_unit_fading(draw_antennas, rng);
    for (std::size_t vi = 0; vi < values.size(); ++vi) {
      ExperimentConfig local = config;
      if (antenna_sweep) {
        local.params.antennas = static_cast<int>(values[vi]);
        per_value[vi].push_back(
            run_trial(local, channel::truncate_fading(fading, local.params.antennas)));
      } else if (!config.sweep_parameter.empty()) {
        set_distance(local.topology, config.sweep_parameter, values[vi]);
        per_value[vi].push_back(run_trial(local, fading));
      } else {
        per_value[vi].push_back(run_trial(local, fading));
      }
    }
  }

  result.points.reserve(values.size());
  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    result.points.push_back(aggregate(per_value[vi], values[vi]));
  }
  if (records_out != nullptr) *records_out = std::move(per_value);
  return result;
}

}  // namespace specshare::experiments
