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

#include "specshare/validation.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace specshare::cli {

namespace {

experiments::ExperimentConfig configure(const Options& options) {
  experiments::ExperimentConfig config;
  if (!options.config_path.empty()) {
    config = load_config(options.config_path);
  }
  if (options.seed) config.base_seed = *options.seed;
  if (options.trials) config.realizations = *options.trials;
  if (options.grid_step) config.grid_step = *options.grid_step;
  return config;
}

// Writes to the output file when requested, else to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw config_error(path + ": cannot open output file");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

const char* mode_name(game::Mode mode) {
  return mode == game::Mode::cooperative ? "cooperative" : "non_cooperative";
}

void write_sweep_csv(std::ostream& os, const experiments::SweepResult& result) {
  os << "sweep_parameter,sweep_value,utility_p_game,utility_p_nc,"
        "utility_s_game,utility_s_nc,welfare_game,welfare_nc,"
        "welfare_centralized,coop_mode_frequency,trials_used,trials_skipped\n";
  const std::string parameter = result.parameter.empty() ? "none" : result.parameter;
  for (const auto& p : result.points) {
    os << parameter << ',' << format_number(p.sweep_value) << ','
       << format_number(p.mean_utility_p_game) << ','
       << format_number(p.mean_utility_p_nc) << ','
       << format_number(p.mean_utility_s_game) << ','
       << format_number(p.mean_utility_s_nc) << ','
       << format_number(p.mean_welfare_game) << ','
       << format_number(p.mean_welfare_nc) << ','
       << format_number(p.mean_welfare_centralized) << ','
       << format_number(p.coop_mode_frequency) << ','
       << p.trials_used << ',' << p.trials_skipped << '\n';
  }
}

void write_dump_csv(std::ostream& os, const experiments::SweepResult& result,
                    const std::vector<std::vector<experiments::TrialRecord>>& records) {
  os << "sweep_value,trial,skipped,mode,alpha_star,tau_star,mu_star,beta_star,"
        "utility_p,utility_s,welfare_game,welfare_nc,welfare_centralized\n";
  for (std::size_t vi = 0; vi < records.size(); ++vi) {
    const double value = result.points[vi].sweep_value;
    for (std::size_t trial = 0; trial < records[vi].size(); ++trial) {
      const auto& rec = records[vi][trial];
      os << format_number(value) << ',' << trial << ',' << (rec.skipped ? 1 : 0) << ',';
      if (rec.skipped) {
        os << "skipped,0,0,0,0,0,0,0,0,0\n";
        continue;
      }
      const auto& eq = rec.equilibrium;
      os << mode_name(eq.mode) << ',' << format_number(eq.alpha_star) << ','
         << format_number(eq.leader.tau) << ',' << format_number(eq.leader.mu) << ','
         << format_number(eq.follower.beta) << ',' << format_number(eq.utility_p) << ','
         << format_number(eq.utility_s) << ',' << format_number(rec.welfare_game) << ','
         << format_number(rec.welfare_nc) << ','
         << format_number(rec.centralized.welfare) << '\n';
    }
  }
}

}  // namespace

int cmd_equilibrium(const Options& options) {
  experiments::ExperimentConfig config = configure(options);

  channel::EffectiveGains gains;
  if (!options.channel_path.empty()) {
    const auto realization = load_channel_file(options.channel_path);
    config.params.antennas = realization.antennas();
    gains = channel::effective_gains(realization);
  } else {
    std::mt19937_64 rng(experiments::trial_seed(config.base_seed, 0));
    gains = channel::effective_gains(
        channel::sample_channel(config.topology, config.params.antennas, rng));
  }

  const auto eq = game::stackelberg_equilibrium(config.params, gains, config.grid_step);
  const double u_p_nc = game::utility_p_nc(config.params, gains);
  const double u_s_nc = game::utility_s_nc(eq.alpha_star, config.params, gains);

  Sink sink(options.output_path);
  std::ostream& os = sink.stream();
  os << "mode:            " << mode_name(eq.mode) << '\n'
     << "alpha_star:      " << format_number(eq.alpha_star) << '\n'
     << "leader_valid:    " << (eq.leader.valid ? "yes" : "no") << '\n'
     << "tau_star:        " << format_number(eq.leader.tau) << '\n'
     << "mu_star:         " << format_number(eq.leader.mu) << '\n'
     << "beta_star:       " << format_number(eq.follower.beta) << '\n'
     << "rate_p:          " << format_number(eq.rate_p) << '\n'
     << "rate_s:          " << format_number(eq.rate_s) << '\n'
     << "utility_p:       " << format_number(eq.utility_p) << '\n'
     << "utility_s:       " << format_number(eq.utility_s) << '\n'
     << "utility_p_nc:    " << format_number(u_p_nc) << '\n'
     << "utility_s_nc:    " << format_number(u_s_nc) << '\n';
  os << "csv:\n"
     << "mode,alpha_star,tau_star,mu_star,beta_star,rate_p,rate_s,utility_p,utility_s\n"
     << mode_name(eq.mode) << ',' << format_number(eq.alpha_star) << ','
     << format_number(eq.leader.tau) << ',' << format_number(eq.leader.mu) << ','
     << format_number(eq.follower.beta) << ',' << format_number(eq.rate_p) << ','
     << format_number(eq.rate_s) << ',' << format_number(eq.utility_p) << ','
     << format_number(eq.utility_s) << '\n';
  return kExitOk;
}

int cmd_sweep(const Options& options) {
  experiments::ExperimentConfig config = configure(options);
  if (config.sweep_parameter.empty()) {
    throw config_error("sweep: configuration declares no sweep (add 'sweep = <parameter> <values...>')");
  }

  std::vector<std::vector<experiments::TrialRecord>> records;
  const auto result = experiments::run_sweep(
      config, options.dump_path.empty() ? nullptr : &records);

  Sink sink(options.output_path);
  write_sweep_csv(sink.stream(), result);
  if (!options.dump_path.empty()) {
    std::ofstream dump(options.dump_path);
    if (!dump) throw config_error(options.dump_path + ": cannot open dump file");
    write_dump_csv(dump, result, records);
  }
  return kExitOk;
}

int cmd_validate(const Options& options) {
  experiments::ExperimentConfig dominance = configure(options);
  if (options.config_path.empty()) {
    dominance.realizations = 1000;
    dominance.grid_step = 2e-3;
    if (options.trials) dominance.realizations = *options.trials;
    if (options.grid_step) dominance.grid_step = *options.grid_step;
  }
  const std::uint64_t seed = options.seed.value_or(dominance.base_seed);

  const auto results = validation::run_all(seed, dominance, options.suites);
  if (results.empty()) {
    throw config_error("validate: no suite matches the requested filter");
  }
  bool all_passed = true;
  for (const auto& suite : results) {
    std::cout << (suite.passed ? "[PASS] " : "[FAIL] ") << suite.name << ": "
              << suite.detail << " (" << format_number(suite.seconds) << " s)\n";
    all_passed = all_passed && suite.passed;
  }
  return all_passed ? kExitOk : kExitValidationFailure;
}

}  // namespace specshare::cli
