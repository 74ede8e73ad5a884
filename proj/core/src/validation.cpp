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

#include "specshare/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace specshare::validation {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

double log_uniform(std::mt19937_64& rng, double lo_exp, double hi_exp) {
  std::uniform_real_distribution<double> u(lo_exp, hi_exp);
  return std::pow(10.0, u(rng));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

std::string describe(int failures, int checks, double max_error) {
  std::ostringstream os;
  os << failures << "/" << checks << " failed, worst error " << max_error;
  return os.str();
}

}  // namespace

Instance random_instance(std::mt19937_64& rng) {
  Instance inst;
  inst.params.p = log_uniform(rng, 0.0, 3.0);
  inst.params.sigma2 = log_uniform(rng, -0.3, 0.3);
  inst.params.eta = uniform(rng, 0.1, 0.9);
  inst.params.e0 = log_uniform(rng, -1.0, 1.3);
  inst.params.lambda_p = log_uniform(rng, 0.0, 2.0);
  inst.params.lambda_s = log_uniform(rng, 0.0, 2.0);
  inst.params.antennas = 2 + static_cast<int>(uniform(rng, 0.0, 3.0));
  inst.gains.h_p2 = log_uniform(rng, -5.0, -1.0);
  inst.gains.h_ps2 = log_uniform(rng, -5.0, -1.0);
  inst.gains.h_s2 = log_uniform(rng, -4.0, 0.0);
  inst.gains.zf_gain_p = log_uniform(rng, -4.0, 0.0);
  inst.gains.zf_gain_s = log_uniform(rng, -4.0, 0.0);
  inst.tau = uniform(rng, 0.0, 0.99);
  return inst;
}

double closed_form_beta(double mu, double tau, const SystemParams& params,
                        const EffectiveGains& gains) {
  const auto response = game::follower_best_beta(mu, tau, params, gains);
  if (!response.valid) throw std::domain_error("follower rejects this price");
  return response.beta;
}

SuiteResult run_zf_suite(std::uint64_t seed, int draws_per_n) {
  Stopwatch watch;
  SuiteResult res;
  res.name = "zf";
  std::mt19937_64 rng(seed);
  for (int n : {2, 4, 6}) {
    for (int i = 0; i < draws_per_n; ++i) {
      const auto fading = channel::sample_unit_fading(n, rng);
      ++res.checks;
      const auto [z_p, z_s] = channel::zf_projectors(fading.g_p, fading.g_s);
      const auto [w_p, w_s] = channel::zf_weights(fading.g_p, fading.g_s);
      const double null_p = std::abs(w_p.dot(fading.g_s)) / fading.g_s.norm();
      const double null_s = std::abs(w_s.dot(fading.g_p)) / fading.g_p.norm();
      const double herm = std::max((z_p - z_p.adjoint().eval()).norm(),
                                   (z_s - z_s.adjoint().eval()).norm());
      const double idem = std::max((z_p * z_p - z_p).norm(), (z_s * z_s - z_s).norm());
      const double unit = std::max(std::abs(w_p.norm() - 1.0), std::abs(w_s.norm() - 1.0));
      const double worst = std::max({null_p, null_s, herm, idem, unit});
      res.max_error = std::max(res.max_error, worst);
      if (null_p > 1e-10 || null_s > 1e-10 || herm > 1e-12 || idem > 1e-12 ||
          unit > 1e-12) {
        ++res.failures;
      }
    }
  }
  res.passed = res.failures == 0;
  res.seconds = watch.seconds();
  res.detail = describe(res.failures, res.checks, res.max_error);
  return res;
}

SuiteResult run_follower_oracle_suite(std::uint64_t seed, int instances,
                                      double grid_step, double tolerance,
                                      const BetaResponder& responder) {
  Stopwatch watch;
  SuiteResult res;
  res.name = "follower";
  std::mt19937_64 rng(seed);
  while (res.checks < instances) {
    const Instance inst = random_instance(rng);
    game::AuxTerms aux;
    try {
      aux = game::aux_terms(inst.tau, inst.params, inst.gains);
    } catch (const std::domain_error&) {
      continue;
    }
    if (!(aux.saturation_price() > 0.0)) continue;
    // mu in the acceptable band (floor, 10 xy].
    const double lo = aux.validity_floor();
    const double mu = lo + uniform(rng, 1e-9, 1.0) * (10.0 * aux.saturation_price() - lo);
    ++res.checks;
    double gap = 0.0;
    try {
      const double beta = responder(mu, inst.tau, inst.params, inst.gains);
      const double u_closed = game::utility_s_co(inst.tau, mu, beta, inst.params, inst.gains);
      const double beta_grid =
          welfare::brute_force_beta(mu, inst.tau, inst.params, inst.gains, grid_step);
      const double u_grid =
          game::utility_s_co(inst.tau, mu, beta_grid, inst.params, inst.gains);
      gap = u_grid - u_closed;
    } catch (const std::exception&) {
      ++res.failures;
      continue;
    }
    res.max_error = std::max(res.max_error, gap);
    if (gap > tolerance) ++res.failures;
  }
  res.passed = res.failures == 0;
  res.seconds = watch.seconds();
  res.detail = describe(res.failures, res.checks, res.max_error);
  return res;
}

SuiteResult run_leader_oracle_suite(std::uint64_t seed, int instances,
                                    double step_fraction, double tolerance) {
  Stopwatch watch;
  SuiteResult res;
  res.name = "leader";
  std::mt19937_64 rng(seed);
  int attempts = 0;
  const int max_attempts = instances * 1000;
  while (res.checks < instances && attempts++ < max_attempts) {
    const Instance inst = random_instance(rng);
    game::LeaderSolution price;
    try {
      price = game::leader_price(inst.tau, inst.params, inst.gains);
    } catch (const std::domain_error&) {
      continue;
    }
    if (!price.valid) continue;
    ++res.checks;
    const auto aux = game::aux_terms(inst.tau, inst.params, inst.gains);
    const auto mu_grid = welfare::brute_force_mu(
        inst.tau, inst.params, inst.gains, step_fraction * aux.saturation_price());
    if (!mu_grid.has_value()) {
      ++res.failures;
      continue;
    }
    const double u_closed = game::utility_p_co(
        inst.tau, price.mu, closed_form_beta(price.mu, inst.tau, inst.params, inst.gains),
        inst.params, inst.gains);
    const double u_grid = game::utility_p_co(
        inst.tau, *mu_grid, closed_form_beta(*mu_grid, inst.tau, inst.params, inst.gains),
        inst.params, inst.gains);
    const double gap = u_grid - u_closed;
    res.max_error = std::max(res.max_error, gap);
    if (gap > tolerance) ++res.failures;
  }
  if (res.checks < instances) {
    res.failures += instances - res.checks;
    res.detail = "could not draw enough valid instances";
  }
  res.passed = res.failures == 0;
  res.seconds = watch.seconds();
  if (res.detail.empty()) res.detail = describe(res.failures, res.checks, res.max_error);
  return res;
}

SuiteResult run_identity_suite(std::uint64_t seed, int draws, double relative_tolerance) {
  Stopwatch watch;
  SuiteResult res;
  res.name = "identities";
  std::mt19937_64 rng(seed);
  while (res.checks < draws) {
    const Instance inst = random_instance(rng);
    game::AuxTerms aux;
    try {
      aux = game::aux_terms(inst.tau, inst.params, inst.gains);
    } catch (const std::domain_error&) {
      continue;
    }
    if (!(aux.saturation_price() > 0.0)) continue;
    ++res.checks;

    // Payment cancellation: U_P^CO + U_S^CO == lambda_P R_P + lambda_S R_S.
    const double mu = uniform(rng, 0.1, 2.0) * aux.saturation_price();
    const double beta = uniform(rng, 1e-3, 1.0);
    const double rate_sum =
        inst.params.lambda_p * rates::rate_p_co(inst.tau, beta, inst.params, inst.gains) +
        inst.params.lambda_s * rates::rate_s_co(inst.tau, beta, inst.params, inst.gains);
    const double utility_sum =
        game::utility_p_co(inst.tau, mu, beta, inst.params, inst.gains) +
        game::utility_s_co(inst.tau, mu, beta, inst.params, inst.gains);
    const double payment =
        mu * beta * rates::harvested_energy(inst.tau, inst.params, inst.gains);
    const double scale = std::max(1.0, std::abs(rate_sum) + 2.0 * std::abs(payment));
    const double cancel_err = std::abs(utility_sum - rate_sum) / scale;

    // Branch continuity at mu = xy: interior expression (beta* = 1) must meet
    // the saturated expression. Both are recomputed here from the aux terms.
    const double xy = aux.saturation_price();
    const double energy = rates::harvested_energy(inst.tau, inst.params, inst.gains);
    const double lead = inst.params.lambda_p * inst.tau * std::log2(aux.a);
    const double half = 0.5 * inst.params.lambda_p * (1.0 - inst.tau);
    const double k = 1.0 / aux.x + 1.0;
    const double interior =
        lead +
        half * std::log2(aux.a + (xy * aux.b * k - aux.b * aux.y) /
                                     (xy * aux.c + xy * aux.d * k - aux.d * aux.y)) -
        xy * k * energy + aux.y * energy;
    const double saturated =
        lead + half * std::log2(aux.a + aux.b / (aux.c + aux.d)) - xy * energy;
    const double branch_err =
        std::abs(interior - saturated) / std::max(1.0, std::abs(saturated));

    const double worst = std::max(cancel_err, branch_err);
    res.max_error = std::max(res.max_error, worst);
    if (worst > relative_tolerance) ++res.failures;
  }
  res.passed = res.failures == 0;
  res.seconds = watch.seconds();
  res.detail = describe(res.failures, res.checks, res.max_error);
  return res;
}

SuiteResult run_dominance_suite(const experiments::ExperimentConfig& config, double slack) {
  Stopwatch watch;
  SuiteResult res;
  res.name = "dominance";
  for (int trial = 0; trial < config.realizations; ++trial) {
    const auto rec = experiments::run_trial(config, trial);
    if (rec.skipped) continue;
    ++res.checks;
    const double game_excess = rec.welfare_game - rec.centralized.welfare;
    const double nc_excess = rec.welfare_nc - rec.centralized.welfare;
    res.max_error = std::max({res.max_error, game_excess, nc_excess});
    if (game_excess > slack || nc_excess > 0.0) ++res.failures;
  }
  res.passed = res.failures == 0 && res.checks > 0;
  res.seconds = watch.seconds();
  res.detail = describe(res.failures, res.checks, res.max_error);
  return res;
}

std::vector<SuiteResult> run_all(std::uint64_t seed,
                                 const experiments::ExperimentConfig& dominance_config,
                                 const std::vector<std::string>& filter) {
  auto wanted = [&](const std::string& name) {
    return filter.empty() ||
           std::find(filter.begin(), filter.end(), name) != filter.end();
  };
  std::vector<SuiteResult> out;
  if (wanted("zf")) out.push_back(run_zf_suite(seed));
  if (wanted("follower")) out.push_back(run_follower_oracle_suite(seed + 1));
  if (wanted("leader")) out.push_back(run_leader_oracle_suite(seed + 2));
  if (wanted("identities")) out.push_back(run_identity_suite(seed + 3));
  if (wanted("dominance")) out.push_back(run_dominance_suite(dominance_config));
  return out;
}

}  // namespace specshare::validation
