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

#include "specshare/welfare.hpp"

#include <cmath>
#include <stdexcept>

namespace specshare::welfare {

namespace {

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

double social_welfare_co(double tau, double beta, const SystemParams& params,
                         const EffectiveGains& gains) {
  return params.lambda_p * rates::rate_p_co(tau, beta, params, gains) +
         params.lambda_s * rates::rate_s_co(tau, beta, params, gains);
}

WelfareResult centralized_optimum(const SystemParams& params,
                                  const EffectiveGains& gains, double grid_step) {
  const int m = grid_intervals(grid_step);

  // Non-cooperative branch first: on exact ties it wins.
  WelfareResult best;
  const double w_p_nc = params.lambda_p * rates::rate_p_nc(params, gains);
  best.mode = Mode::non_cooperative;
  best.alpha = 0.0;
  best.welfare = w_p_nc + params.lambda_s * rates::rate_s_nc(0.0, params, gains);
  for (int i = 1; i <= m; ++i) {
    const double alpha = (i == m) ? 1.0 : i * grid_step;
    const double w = w_p_nc + params.lambda_s * rates::rate_s_nc(alpha, params, gains);
    if (w > best.welfare) {
      best.welfare = w;
      best.alpha = alpha;
    }
  }

  // Cooperative (tau, beta) grid. The per-tau constants reduce each cell to
  // two log2 calls; prices cancel in welfare so mu never appears.
  const double s2 = params.sigma2;
  const double a = 1.0 + params.p * gains.h_p2 / s2;
  for (int i = 0; i < m; ++i) {
    const double tau = i * grid_step;
    const double remaining = 1.0 - tau;
    const double energy = rates::harvested_energy(tau, params, gains);
    const double b = 2.0 * params.p * gains.h_s2 * energy * gains.zf_gain_p;
    const double c = params.p * gains.h_s2 * remaining * s2 + remaining * s2 * s2;
    const double d = 2.0 * energy * gains.zf_gain_p * s2;
    const double x = 2.0 * energy * gains.zf_gain_s / (remaining * s2);
    const double lead = params.lambda_p * tau * std::log2(a);
    const double half_p = 0.5 * params.lambda_p * remaining;
    const double half_s = 0.5 * params.lambda_s * remaining;
    for (int j = 1; j <= m; ++j) {
      const double beta = (j == m) ? 1.0 : j * grid_step;
      const double w = lead + half_p * std::log2(a + b * beta / (c + d * beta)) +
                       half_s * std::log2(1.0 + x * (1.0 - beta));
      if (w > best.welfare) {
        best.welfare = w;
        best.mode = Mode::cooperative;
        best.tau = tau;
        best.beta = beta;
      }
    }
  }
  return best;
}

double brute_force_beta(double mu, double tau, const SystemParams& params,
                        const EffectiveGains& gains, double step) {
  if (!(step > 0.0 && step <= 1e-3)) {
    throw std::domain_error("brute_force_beta: step must lie in (0, 1e-3]");
  }
  const long long m = std::llround(1.0 / step);
  double best_beta = step;
  double best_u = game::utility_s_co(tau, mu, step, params, gains);
  for (long long j = 2; j <= m; ++j) {
    const double beta = (j == m) ? 1.0 : j * step;
    const double u = game::utility_s_co(tau, mu, beta, params, gains);
    if (u > best_u) {
      best_u = u;
      best_beta = beta;
    }
  }
  return best_beta;
}

std::optional<double> brute_force_mu(double tau, const SystemParams& params,
                                     const EffectiveGains& gains, double step) {
  if (!(rates::harvested_energy(tau, params, gains) > 0.0)) return std::nullopt;
  const game::AuxTerms t = game::aux_terms(tau, params, gains);
  const double xy = t.saturation_price();
  if (!(xy > 0.0)) return std::nullopt;  // empty band: no price can be tested
  if (!(step > 0.0 && step <= 1e-3 * xy)) {
    throw std::domain_error("brute_force_mu: step must lie in (0, 1e-3 * xy]");
  }
  const double lo = t.validity_floor();
  const double hi = 10.0 * xy;
  const long long count = static_cast<long long>((hi - lo) / step + 1e-9);
  bool found = false;
  double best_mu = 0.0;
  double best_u = 0.0;
  for (long long k = 1; k <= count; ++k) {
    const double mu = lo + static_cast<double>(k) * step;
    const auto response = game::follower_best_beta(mu, tau, params, gains);
    if (!response.valid) continue;
    const double u = game::utility_p_co(tau, mu, response.beta, params, gains);
    if (!found || u > best_u) {
      found = true;
      best_u = u;
      best_mu = mu;
    }
  }
  if (!found) return std::nullopt;
  return best_mu;
}

}  // namespace specshare::welfare
