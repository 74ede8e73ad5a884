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

#include "specshare/game.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specshare::game {

namespace {

// Number of grid intervals for a uniform search on [0,1]. Steps that do not
// divide 1 exactly fall back to floor(1/step); the alpha grid then tops out
// with an explicit endpoint at 1.
int grid_intervals(double step) {
  if (!(step > 0.0 && step <= 0.01)) {
    throw std::domain_error("grid step must lie in (0, 0.01]");
  }
  const double raw = 1.0 / step;
  const long long rounded = std::llround(raw);
  if (std::abs(raw - static_cast<double>(rounded)) < 1e-6) {
    return static_cast<int>(rounded);
  }
  return static_cast<int>(raw);
}

}  // namespace

double utility_p_nc(const SystemParams& params, const EffectiveGains& gains) {
  return params.lambda_p * rates::rate_p_nc(params, gains);
}

double utility_s_nc(double alpha, const SystemParams& params,
                    const EffectiveGains& gains) {
  return params.lambda_s * rates::rate_s_nc(alpha, params, gains);
}

AlphaSearch solve_alpha(const SystemParams& params, const EffectiveGains& gains,
                        double grid_step) {
  const int m = grid_intervals(grid_step);
  AlphaSearch best;
  best.alpha = 0.0;
  best.utility = utility_s_nc(0.0, params, gains);
  for (int i = 1; i <= m; ++i) {
    const double alpha = (i == m) ? 1.0 : i * grid_step;
    const double u = utility_s_nc(alpha, params, gains);
    if (u > best.utility) {
      best.alpha = alpha;
      best.utility = u;
    }
  }
  return best;
}

double utility_p_co(double tau, double mu, double beta, const SystemParams& params,
                    const EffectiveGains& gains) {
  return params.lambda_p * rates::rate_p_co(tau, beta, params, gains) -
         mu * beta * rates::harvested_energy(tau, params, gains);
}

double utility_s_co(double tau, double mu, double beta, const SystemParams& params,
                    const EffectiveGains& gains) {
  return params.lambda_s * rates::rate_s_co(tau, beta, params, gains) +
         mu * beta * rates::harvested_energy(tau, params, gains);
}

AuxTerms aux_terms(double tau, const SystemParams& params,
                   const EffectiveGains& gains) {
  const double energy = rates::harvested_energy(tau, params, gains);
  if (!(energy > 0.0)) {
    throw std::domain_error("aux_terms: zero available energy (e0 = 0 at tau = 0)");
  }
  const double s2 = params.sigma2;
  const double remaining = 1.0 - tau;
  AuxTerms t;
  t.x = 2.0 * energy * gains.zf_gain_s / (remaining * s2);
  t.y = params.lambda_s * remaining / (2.0 * energy * std::numbers::ln2);
  t.a = 1.0 + params.p * gains.h_p2 / s2;
  t.b = 2.0 * params.p * gains.h_s2 * energy * gains.zf_gain_p;
  t.c = params.p * gains.h_s2 * remaining * s2 + remaining * s2 * s2;
  t.d = 2.0 * energy * gains.zf_gain_p * s2;
  return t;
}

FollowerSolution follower_best_beta(double mu, double tau, const SystemParams& params,
                                    const EffectiveGains& gains) {
  if (!(mu > 0.0)) throw std::domain_error("follower_best_beta: mu must be > 0");
  const AuxTerms t = aux_terms(tau, params, gains);
  FollowerSolution s;
  if (mu > t.saturation_price()) {
    s.beta = 1.0;
    s.branch = FollowerSolution::Branch::saturated;
    s.valid = true;
    return s;
  }
  if (mu > t.validity_floor()) {
    // Interior branch implies xy > 0, hence x > 0 and 1/x is safe.
    const double beta = 1.0 / t.x - t.y / mu + 1.0;
    if (beta > 0.0) {
      s.beta = std::min(beta, 1.0);
      s.branch = FollowerSolution::Branch::interior;
      s.valid = true;
      return s;
    }
  }
  s.valid = false;  // the SU rejects: selling would not pay for the rate loss
  return s;
}

std::optional<double> leader_utility_given_beta(double tau, double mu,
                                                const SystemParams& params,
                                                const EffectiveGains& gains) {
  const AuxTerms t = aux_terms(tau, params, gains);
  if (!(mu > t.validity_floor())) return std::nullopt;
  const double energy = rates::harvested_energy(tau, params, gains);
  const double lead = params.lambda_p * tau * std::log2(t.a);
  const double half = 0.5 * params.lambda_p * (1.0 - tau);
  if (mu > t.saturation_price()) {
    // Saturated follower: beta = 1.
    return lead + half * std::log2(t.a + t.b / (t.c + t.d)) - mu * energy;
  }
  const double k = 1.0 / t.x + 1.0;
  const double ratio =
      (mu * t.b * k - t.b * t.y) / (mu * t.c + mu * t.d * k - t.d * t.y);
  return lead + half * std::log2(t.a + ratio) - mu * k * energy + t.y * energy;
}

LeaderSolution leader_price(double tau, const SystemParams& params,
                            const EffectiveGains& gains) {
  LeaderSolution out;
  out.tau = tau;
  if (!(rates::harvested_energy(tau, params, gains) > 0.0)) return out;
  const AuxTerms t = aux_terms(tau, params, gains);
  if (!(t.x > 0.0)) return out;  // zero SU beamforming gain: no interior price
  const double energy = rates::harvested_energy(tau, params, gains);
  const double k = 1.0 / t.x + 1.0;
  const double cdk = t.c + t.d * k;
  const double denom = 2.0 * t.a * cdk * cdk + 2.0 * t.b * k * cdk;
  const double radicand =
      t.b * t.b * t.c * t.c * t.y * t.y +
      2.0 * params.lambda_p * (1.0 - tau) * t.b * t.c * t.y /
          (k * energy * std::numbers::ln2) *
          (t.a * cdk * cdk + t.b * k * cdk);
  if (radicand < 0.0) return out;  // not reachable for positive parameters
  const double mu_star =
      (2.0 * t.a * t.d * t.y * cdk + t.b * t.y * (t.c + 2.0 * t.d * k) +
       std::sqrt(radicand)) /
      denom;
  if (!(mu_star > t.validity_floor())) return out;
  out.mu = std::min(mu_star, t.saturation_price());
  out.valid = true;
  return out;
}

LeaderSolution leader_tau(const SystemParams& params, const EffectiveGains& gains,
                          double grid_step) {
  const int m = grid_intervals(grid_step);
  LeaderSolution best;
  double best_utility = 0.0;
  for (int i = 0; i < m; ++i) {  // tau grid excludes 1: the rates divide by 1-tau
    const double tau = i * grid_step;
    const LeaderSolution lp = leader_price(tau, params, gains);
    if (!lp.valid) continue;
    const auto u = leader_utility_given_beta(tau, lp.mu, params, gains);
    if (!u.has_value()) continue;
    if (!best.valid || *u > best_utility) {
      best = lp;
      best_utility = *u;
    }
  }
  return best;
}

Equilibrium stackelberg_equilibrium(const SystemParams& params,
                                    const EffectiveGains& gains, double grid_step) {
  Equilibrium eq;
  const AlphaSearch nc = solve_alpha(params, gains, grid_step);
  eq.alpha_star = nc.alpha;
  const double u_p_nc = utility_p_nc(params, gains);

  eq.leader = leader_tau(params, gains, grid_step);
  if (eq.leader.valid) {
    eq.follower = follower_best_beta(eq.leader.mu, eq.leader.tau, params, gains);
    if (eq.follower.valid) {
      const double u_p_co = utility_p_co(eq.leader.tau, eq.leader.mu,
                                         eq.follower.beta, params, gains);
      const double u_s_co = utility_s_co(eq.leader.tau, eq.leader.mu,
                                         eq.follower.beta, params, gains);
      // Both parties must strictly improve; ties stay non-cooperative.
      if (u_p_co > u_p_nc && u_s_co > nc.utility) {
        eq.mode = Mode::cooperative;
        eq.utility_p = u_p_co;
        eq.utility_s = u_s_co;
        eq.rate_p = rates::rate_p_co(eq.leader.tau, eq.follower.beta, params, gains);
        eq.rate_s = rates::rate_s_co(eq.leader.tau, eq.follower.beta, params, gains);
        return eq;
      }
    }
  }
  eq.mode = Mode::non_cooperative;
  eq.utility_p = u_p_nc;
  eq.utility_s = nc.utility;
  eq.rate_p = rates::rate_p_nc(params, gains);
  eq.rate_s = rates::rate_s_nc(nc.alpha, params, gains);
  return eq;
}

}  // namespace specshare::game
