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

#ifndef SPECSHARE_WELFARE_HPP
#define SPECSHARE_WELFARE_HPP

#include "specshare/game.hpp"

#include <optional>

namespace specshare::welfare {

using channel::EffectiveGains;
using game::Mode;
using rates::SystemParams;

/// Centralized social-welfare optimum over both operation modes. For the
/// non-cooperative mode only `alpha` is meaningful; for the cooperative mode
/// `tau` and `beta` are.
struct WelfareResult {
  double welfare = 0.0;
  Mode mode = Mode::non_cooperative;
  double tau = 0.0;
  double beta = 1.0;
  double alpha = 0.0;
};

/// lambda_P R_P^CO + lambda_S R_S^CO. The payment cancels, so welfare is
/// price-free.
double social_welfare_co(double tau, double beta, const SystemParams& params,
                         const EffectiveGains& gains);

/// Exhaustive grid benchmark: max over the cooperative (tau, beta) grid and
/// the non-cooperative alpha grid. Exact ties prefer non-cooperative, then
/// smaller grid indices. The default step matches a ~501-point grid per axis;
/// callers comparing against a game solution should pass the game's step so
/// the game's grid is a subset of this one.
WelfareResult centralized_optimum(const SystemParams& params,
                                  const EffectiveGains& gains,
                                  double grid_step = 2e-3);

/// Validation oracle for the follower closed form: grid argmax of U_S^CO
/// over beta in (0,1] (grid starts at `step`, ends exactly at 1).
double brute_force_beta(double mu, double tau, const SystemParams& params,
                        const EffectiveGains& gains, double step);

/// Validation oracle for the leader closed form: grid argmax of
/// U_P^CO(tau, mu, beta*(mu)) over mu in (xy/(x+1) + step, 10 xy], using the
/// closed-form follower response. nullopt when the band is degenerate
/// (zero SU beamforming gain or zero available energy).
std::optional<double> brute_force_mu(double tau, const SystemParams& params,
                                     const EffectiveGains& gains, double step);

}  // namespace specshare::welfare

#endif  // SPECSHARE_WELFARE_HPP
