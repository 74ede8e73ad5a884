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

#ifndef SPECSHARE_VALIDATION_HPP
#define SPECSHARE_VALIDATION_HPP

#include "specshare/experiments.hpp"

#include <functional>
#include <string>
#include <vector>

namespace specshare::validation {

using channel::EffectiveGains;
using rates::SystemParams;

/// Outcome of one validation suite.
struct SuiteResult {
  std::string name;
  bool passed = false;
  int checks = 0;
  int failures = 0;
  double max_error = 0.0;  // suite-specific worst observed error/gap
  double seconds = 0.0;
  std::string detail;
};

/// Random problem instance used by the oracle suites.
struct Instance {
  SystemParams params;
  EffectiveGains gains;
  double tau = 0.0;
};

/// Draws a random instance with simulation-scale magnitudes (tau in [0, 0.99]).
Instance random_instance(std::mt19937_64& rng);

/// Follower response under test: returns the energy share beta for a posted
/// (mu, tau). The default is the closed-form best response; tests can inject
/// a broken one to confirm the suite catches it.
using BetaResponder =
    std::function<double(double mu, double tau, const SystemParams&, const EffectiveGains&)>;
double closed_form_beta(double mu, double tau, const SystemParams&, const EffectiveGains&);

/// ZF nulling, projector Hermitianity and idempotence over random draws for
/// N in {2, 4, 6}.
SuiteResult run_zf_suite(std::uint64_t seed, int draws_per_n = 100);

/// Closed-form beta vs a beta-grid argmax of the follower utility.
SuiteResult run_follower_oracle_suite(std::uint64_t seed, int instances = 500,
                                      double grid_step = 1e-4, double tolerance = 1e-6,
                                      const BetaResponder& responder = closed_form_beta);

/// Closed-form price vs a mu-grid argmax of the leader utility, on valid
/// instances only.
SuiteResult run_leader_oracle_suite(std::uint64_t seed, int instances = 200,
                                    double step_fraction = 1e-4, double tolerance = 1e-6);

/// Payment cancellation and branch continuity at mu = xy, both relative.
SuiteResult run_identity_suite(std::uint64_t seed, int draws = 100,
                               double relative_tolerance = 1e-10);

/// Per-realization welfare dominance of the centralized benchmark at the
/// given configuration (game and centralized share the config grid step).
SuiteResult run_dominance_suite(const experiments::ExperimentConfig& config,
                                double slack = 1e-3);

/// All suites in a fixed order, optionally filtered by name
/// (zf, follower, leader, identities, dominance).
std::vector<SuiteResult> run_all(std::uint64_t seed,
                                 const experiments::ExperimentConfig& dominance_config,
                                 const std::vector<std::string>& filter = {});

}  // namespace specshare::validation

#endif  // SPECSHARE_VALIDATION_HPP
