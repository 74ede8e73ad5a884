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

#ifndef SPECSHARE_GAME_HPP
#define SPECSHARE_GAME_HPP

#include "specshare/rates.hpp"

#include <optional>

namespace specshare::game {

using channel::EffectiveGains;
using rates::SystemParams;

/// Operation mode chosen at the equilibrium.
enum class Mode { non_cooperative, cooperative };

/// The six scalars the closed-form analysis runs on, all recomputable from
/// (tau, params, gains):
///   x = 2 E(tau) ||Z_S g_S||^2 / ((1-tau) sigma^2)
///   y = lambda_S (1-tau) / (2 E(tau) ln 2)
///   a = 1 + P |h_P|^2 / sigma^2
///   b = 2 P ||h_S||^2 E(tau) ||Z_P g_P||^2
///   c = P ||h_S||^2 (1-tau) sigma^2 + (1-tau) sigma^4
///   d = 2 E(tau) ||Z_P g_P||^2 sigma^2
struct AuxTerms {
  double x = 0.0;
  double y = 0.0;
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  /// Price below which the follower would end up with beta <= 0 and reject.
  double validity_floor() const { return x * y / (x + 1.0); }
  /// Price at and above which the follower saturates at beta = 1.
  double saturation_price() const { return x * y; }
};

/// Follower best response to a posted (mu, tau).
struct FollowerSolution {
  enum class Branch { interior, saturated };
  double beta = 1.0;
  Branch branch = Branch::saturated;
  bool valid = false;  // false when mu <= xy/(x+1): the SU rejects
};

/// Leader decision; `valid` is false when no tau admits an acceptable price.
struct LeaderSolution {
  double tau = 0.0;
  double mu = 0.0;
  bool valid = false;
};

/// Result of the non-cooperative harvest-duration search.
struct AlphaSearch {
  double alpha = 0.0;
  double utility = 0.0;  // U_S^NC at alpha
};

/// Full Stackelberg equilibrium for one realization. alpha_star is always
/// the non-cooperative optimum; leader/follower are meaningful when the
/// cooperative path was feasible (leader.valid). Rates and utilities refer
/// to the chosen mode.
struct Equilibrium {
  Mode mode = Mode::non_cooperative;
  double alpha_star = 0.0;
  LeaderSolution leader;
  FollowerSolution follower;
  double utility_p = 0.0;
  double utility_s = 0.0;
  double rate_p = 0.0;
  double rate_s = 0.0;
};

double utility_p_nc(const SystemParams& params, const EffectiveGains& gains);
double utility_s_nc(double alpha, const SystemParams& params, const EffectiveGains& gains);

/// Exhaustive search for alpha* on the uniform [0,1] grid (step in (0,0.01]);
/// smallest maximizing alpha wins ties.
AlphaSearch solve_alpha(const SystemParams& params, const EffectiveGains& gains,
                        double grid_step);

/// lambda_P R_P^CO - mu beta E(tau)  /  lambda_S R_S^CO + mu beta E(tau).
double utility_p_co(double tau, double mu, double beta, const SystemParams& params,
                    const EffectiveGains& gains);
double utility_s_co(double tau, double mu, double beta, const SystemParams& params,
                    const EffectiveGains& gains);

/// Requires E(tau) > 0 (throws std::domain_error otherwise, which can only
/// happen for e0 = 0 at tau = 0).
AuxTerms aux_terms(double tau, const SystemParams& params, const EffectiveGains& gains);

/// Follower best response: invalid below the price floor, interior
/// beta = 1/x - y/mu + 1 up to the saturation price, beta = 1 beyond it.
FollowerSolution follower_best_beta(double mu, double tau, const SystemParams& params,
                                    const EffectiveGains& gains);

/// Leader utility with the follower response substituted in, evaluated on
/// whichever branch mu falls in; continuous across the branch point.
/// nullopt when the follower would reject (mu <= xy/(x+1)).
std::optional<double> leader_utility_given_beta(double tau, double mu,
                                                const SystemParams& params,
                                                const EffectiveGains& gains);

/// Closed-form optimal price for a fixed tau, clamped to the saturation
/// price; invalid when the unclamped stationary price falls at or below the
/// validity floor (or the instance is degenerate: zero SU beamforming gain,
/// zero available energy, or a negative radicand).
LeaderSolution leader_price(double tau, const SystemParams& params,
                            const EffectiveGains& gains);

/// Exhaustive search for tau* over the uniform grid on [0, 1-step];
/// grid points where leader_price is invalid are excluded. Invalid result
/// when every grid point is excluded.
LeaderSolution leader_tau(const SystemParams& params, const EffectiveGains& gains,
                          double grid_step);

/// Assembles the equilibrium: cooperative iff the leader solution is valid
/// and both parties strictly improve on their non-cooperative utilities;
/// otherwise degrades to the non-cooperative mode at alpha*.
Equilibrium stackelberg_equilibrium(const SystemParams& params,
                                    const EffectiveGains& gains, double grid_step);

}  // namespace specshare::game

#endif  // SPECSHARE_GAME_HPP
