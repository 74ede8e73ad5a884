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

#include "specshare/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace specshare::rates {

namespace {

void check_tau(double tau) {
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw std::domain_error("tau must lie in [0,1)");
  }
}

void check_beta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::domain_error("beta must lie in (0,1]");
  }
}

}  // namespace

void SystemParams::validate() const {
  if (!(p > 0.0)) throw std::invalid_argument("params: p must be > 0");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("params: sigma2 must be > 0");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("params: eta must be in (0,1)");
  if (!(e0 >= 0.0)) throw std::invalid_argument("params: e0 must be >= 0");
  if (!(lambda_p > 0.0)) throw std::invalid_argument("params: lambda_p must be > 0");
  if (!(lambda_s > 0.0)) throw std::invalid_argument("params: lambda_s must be > 0");
  if (antennas < 2) throw std::invalid_argument("params: antennas must be >= 2");
}

double harvested_energy(double tau, const SystemParams& params,
                        const EffectiveGains& gains) {
  check_tau(tau);
  return tau * params.eta * (params.p * gains.h_s2 + params.sigma2) + params.e0;
}

double st_transmit_power(double energy_share, double tau,
                         const SystemParams& params, const EffectiveGains& gains) {
  check_tau(tau);
  // Energy spent over a phase of duration (1-tau)/2.
  return 2.0 * energy_share * harvested_energy(tau, params, gains) / (1.0 - tau);
}

double rate_p_nc(const SystemParams& params, const EffectiveGains& gains) {
  return std::log2(1.0 + params.p * gains.h_p2 / params.sigma2);
}

double sinr_nc(double alpha, const SystemParams& params, const EffectiveGains& gains) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::domain_error("sinr_nc: alpha must lie in [0,1)");
  }
  const double energy =
      alpha * params.eta * (params.p * gains.h_s2 + params.sigma2) + params.e0;
  const double interference = params.p * gains.h_ps2 + params.sigma2;
  return energy * gains.zf_gain_s / ((1.0 - alpha) * interference);
}

double rate_s_nc(double alpha, const SystemParams& params, const EffectiveGains& gains) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("rate_s_nc: alpha must lie in [0,1]");
  }
  if (alpha == 1.0) return 0.0;  // continuity limit; no transmission time left
  return (1.0 - alpha) * std::log2(1.0 + sinr_nc(alpha, params, gains));
}

double rate_p_co(double tau, double beta, const SystemParams& params,
                 const EffectiveGains& gains) {
  check_tau(tau);
  check_beta(beta);
  const double s2 = params.sigma2;
  const double direct_snr = params.p * gains.h_p2 / s2;
  // Relayed contribution: ST forwards with power q = 2 beta E(tau)/(1-tau).
  const double q = st_transmit_power(beta, tau, params, gains);
  const double relay = q * params.p * gains.h_s2 * gains.zf_gain_p /
                       (s2 * (params.p * gains.h_s2 + q * gains.zf_gain_p + s2));
  return tau * std::log2(1.0 + direct_snr) +
         0.5 * (1.0 - tau) * std::log2(1.0 + direct_snr + relay);
}

double rate_s_co(double tau, double beta, const SystemParams& params,
                 const EffectiveGains& gains) {
  check_tau(tau);
  check_beta(beta);
  if (beta == 1.0) return 0.0;  // all energy sold for forwarding
  const double q = st_transmit_power(1.0 - beta, tau, params, gains);
  return 0.5 * (1.0 - tau) * std::log2(1.0 + q * gains.zf_gain_s / params.sigma2);
}

}  // namespace specshare::rates
