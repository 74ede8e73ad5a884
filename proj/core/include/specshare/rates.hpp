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

#ifndef SPECSHARE_RATES_HPP
#define SPECSHARE_RATES_HPP

#include "specshare/channel.hpp"

namespace specshare::rates {

using channel::EffectiveGains;

/// Link-level parameters. All power/energy quantities are linear and share
/// the sigma^2 = 1 normalization; dB conversion happens at the CLI boundary
/// only. The block duration is normalized to 1, so energies and powers are
/// interchangeable over a full block.
struct SystemParams {
  double p = 1000.0;      // PT transmit power
  double sigma2 = 1.0;    // noise power, same for all receivers
  double eta = 0.5;       // energy conversion efficiency, in (0,1)
  double e0 = 10.0;       // initial ST energy
  double lambda_p = 100.0;  // PU gain per unit rate
  double lambda_s = 100.0;  // SU gain per unit rate
  int antennas = 6;       // N >= 2

  void validate() const;  // throws std::invalid_argument
};

/// E(tau) = tau * eta * (P ||h_S||^2 + sigma^2) + E0 for tau in [0,1).
double harvested_energy(double tau, const SystemParams& params,
                        const EffectiveGains& gains);

/// ST transmit power when a share of E(tau) is spent over one relay phase of
/// duration (1-tau)/2: 2 * share * E(tau) / (1-tau). Both cooperative rates
/// are expressed through this helper.
double st_transmit_power(double energy_share, double tau,
                         const SystemParams& params, const EffectiveGains& gains);

/// Non-cooperative PU rate log2(1 + P |h_P|^2 / sigma^2).
double rate_p_nc(const SystemParams& params, const EffectiveGains& gains);

/// Non-cooperative SU SINR after harvesting for a fraction alpha in [0,1).
double sinr_nc(double alpha, const SystemParams& params, const EffectiveGains& gains);

/// (1-alpha) log2(1 + sinr_nc(alpha)); defined as exactly 0 at alpha = 1.
double rate_s_nc(double alpha, const SystemParams& params, const EffectiveGains& gains);

/// Cooperative PU rate: direct transmission during the harvest phase plus an
/// amplify-and-forward combining term over the two relay phases. beta is the
/// ST energy share sold for forwarding, in (0,1].
double rate_p_co(double tau, double beta, const SystemParams& params,
                 const EffectiveGains& gains);

/// Cooperative SU rate using the remaining (1-beta) energy share.
double rate_s_co(double tau, double beta, const SystemParams& params,
                 const EffectiveGains& gains);

}  // namespace specshare::rates

#endif  // SPECSHARE_RATES_HPP
