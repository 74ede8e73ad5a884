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
#include "specshare/validation.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace specshare;
using specshare::testing::toy_gains;
using specshare::testing::toy_params;

TEST_CASE("social welfare is the price-free utility sum") {
  const auto params = toy_params();
  const auto gains = toy_gains();

  for (double mu : {0.3, 1.0, 4.0}) {
    const double lhs = welfare::social_welfare_co(0.2, 0.6, params, gains);
    const double rhs = game::utility_p_co(0.2, mu, 0.6, params, gains) +
                       game::utility_s_co(0.2, mu, 0.6, params, gains);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  CHECK(welfare::social_welfare_co(0.0, 0.5, params, gains) ==
        doctest::Approx(rates::rate_p_co(0.0, 0.5, params, gains) + 0.5).epsilon(1e-12));
  CHECK(welfare::social_welfare_co(0.3, 1.0, params, gains) ==
        doctest::Approx(params.lambda_p * rates::rate_p_co(0.3, 1.0, params, gains))
            .epsilon(1e-12));
}

TEST_CASE("centralized_optimum refines consistently without forwarding gain") {
  auto params = toy_params();
  auto gains = toy_gains();
  gains.zf_gain_p = 0.0;

  // With a strong SU link and heavy PT-to-SR interference the planner still
  // prefers cooperation: the non-cooperative SINR is crushed by the PT while
  // the cooperative phase is interference-free, so the SU rate gain outweighs
  // the PU duty-cycle loss.
  gains.zf_gain_s = 50.0;
  gains.h_ps2 = 100.0;
  params.lambda_s = 10.0;
  const auto coarse = welfare::centralized_optimum(params, gains, 2e-3);
  const auto reference = welfare::centralized_optimum(params, gains, 1e-4);
  CHECK(coarse.mode == game::Mode::cooperative);
  CHECK(reference.mode == coarse.mode);
  CHECK(reference.welfare >= coarse.welfare - 1e-12);
  CHECK(reference.welfare - coarse.welfare < 2e-2);
  CHECK(std::abs(reference.tau - coarse.tau) <= 2e-3 + 1e-12);

  // A vanishing SU weight turns the planner into a PU-rate maximizer, and
  // without forwarding gain the full-time direct link wins.
  params.lambda_s = 1e-12;
  gains.zf_gain_s = 1.0;
  const auto pu_only = welfare::centralized_optimum(params, gains, 2e-3);
  CHECK(pu_only.mode == game::Mode::non_cooperative);
  CHECK(pu_only.welfare ==
        doctest::Approx(params.lambda_p * rates::rate_p_nc(params, gains)).epsilon(1e-9));
}

TEST_CASE("centralized_optimum prefers non-cooperative on exact ties") {
  auto params = toy_params();
  channel::EffectiveGains dead{};  // every link gain zero: all rates vanish
  const auto r = welfare::centralized_optimum(params, dead, 2e-3);
  CHECK(r.welfare == 0.0);
  CHECK(r.mode == game::Mode::non_cooperative);
  CHECK(r.alpha == 0.0);
}

TEST_CASE("centralized welfare dominates the game and the non-cooperative point") {
  const auto sim = testing::sim_params();
  channel::Topology topo;
  std::mt19937_64 rng(61);
  for (int i = 0; i < 60; ++i) {
    const auto g = channel::effective_gains(channel::sample_channel(topo, 6, rng));
    const auto eq = game::stackelberg_equilibrium(sim, g, 2e-3);
    const double game_welfare = sim.lambda_p * eq.rate_p + sim.lambda_s * eq.rate_s;
    const double nc_welfare =
        game::utility_p_nc(sim, g) + game::utility_s_nc(eq.alpha_star, sim, g);
    const auto central = welfare::centralized_optimum(sim, g, 2e-3);
    CHECK(central.welfare >= game_welfare - 1e-3);
    CHECK(central.welfare >= nc_welfare);
    CHECK(central.tau >= 0.0);
    CHECK(central.tau < 1.0);
    CHECK(central.beta > 0.0);
    CHECK(central.beta <= 1.0);
    CHECK(central.alpha >= 0.0);
    CHECK(central.alpha <= 1.0);
  }
}

TEST_CASE("brute_force_beta locates the follower optimum") {
  const auto params = toy_params();
  const auto gains = toy_gains();

  const double beta = welfare::brute_force_beta(1.0, 0.0, params, gains, 1e-4);
  CHECK(std::abs(beta - 0.7786524795555183) <= 1e-4 + 1e-12);

  // A price beyond saturation buys everything.
  CHECK(welfare::brute_force_beta(10.0, 0.0, params, gains, 1e-4) == 1.0);

  // Argmax property against the closed form on the same grid.
  const auto closed = game::follower_best_beta(1.0, 0.0, params, gains);
  const double u_grid = game::utility_s_co(0.0, 1.0, beta, params, gains);
  const double u_closed = game::utility_s_co(0.0, 1.0, closed.beta, params, gains);
  CHECK(u_grid >= u_closed - 1e-6);
  CHECK(u_closed >= u_grid);  // the exact stationary point can only be better

  CHECK_THROWS_AS(welfare::brute_force_beta(1.0, 0.0, params, gains, 5e-3),
                  std::domain_error);
}

TEST_CASE("brute_force_beta approaches the closed form as the grid refines") {
  const auto params = toy_params();
  const auto gains = toy_gains();
  const auto closed = game::follower_best_beta(1.0, 0.0, params, gains);
  const double u_star = game::utility_s_co(0.0, 1.0, closed.beta, params, gains);
  double previous_gap = 1e300;
  for (double step : {1e-3, 1e-4}) {
    const double b = welfare::brute_force_beta(1.0, 0.0, params, gains, step);
    const double gap = u_star - game::utility_s_co(0.0, 1.0, b, params, gains);
    CHECK(gap >= -1e-12);
    CHECK(gap <= previous_gap + 1e-15);
    previous_gap = gap;
  }
}

TEST_CASE("brute_force_mu scans the valid price band") {
  const auto params = toy_params();
  const auto gains = toy_gains();

  // Valid tau: the oracle and the closed form agree on the objective.
  const double tau = 0.5;
  const auto aux = game::aux_terms(tau, params, gains);
  const auto mu = welfare::brute_force_mu(tau, params, gains, 1e-4 * aux.saturation_price());
  REQUIRE(mu.has_value());
  const auto price = game::leader_price(tau, params, gains);
  REQUIRE(price.valid);
  const auto b_closed = game::follower_best_beta(price.mu, tau, params, gains);
  const auto b_grid = game::follower_best_beta(*mu, tau, params, gains);
  const double u_closed = game::utility_p_co(tau, price.mu, b_closed.beta, params, gains);
  const double u_grid = game::utility_p_co(tau, *mu, b_grid.beta, params, gains);
  CHECK(u_closed >= u_grid - 1e-12);
  CHECK(u_grid >= u_closed - 1e-6);

  // Saturated regime: the leader clamps at the saturation price and the
  // oracle lands next to it.
  auto params2 = testing::sim_params();
  params2.lambda_s = 1.0;
  channel::EffectiveGains gains2{.h_p2 = 1e-3,
                                 .h_ps2 = 1e-3,
                                 .h_s2 = 1.0,
                                 .zf_gain_p = 1.0,
                                 .zf_gain_s = 1e-3};
  const double tau2 = 0.3;
  const auto price2 = game::leader_price(tau2, params2, gains2);
  const auto aux2 = game::aux_terms(tau2, params2, gains2);
  REQUIRE(price2.valid);
  CHECK(price2.mu == doctest::Approx(aux2.saturation_price()).epsilon(1e-12));
  const double step2 = 1e-4 * aux2.saturation_price();
  const auto mu2 = welfare::brute_force_mu(tau2, params2, gains2, step2);
  REQUIRE(mu2.has_value());
  CHECK(std::abs(*mu2 - aux2.saturation_price()) <= step2 + 1e-12);

  // Degenerate band: no SU beamforming gain, or no energy at all.
  auto mute = gains;
  mute.zf_gain_s = 0.0;
  CHECK_FALSE(welfare::brute_force_mu(0.2, params, mute, 1e-6).has_value());
  auto broke = params;
  broke.e0 = 0.0;
  CHECK_FALSE(welfare::brute_force_mu(0.0, broke, gains, 1e-6).has_value());

  CHECK_THROWS_AS(
      welfare::brute_force_mu(0.5, params, gains, aux.saturation_price() * 0.1),
      std::domain_error);
}

TEST_CASE("centralized welfare improves monotonically on nested grids") {
  const auto sim = testing::sim_params();
  const auto gains = testing::sim_scale_gains();
  double previous = -1e300;
  for (double step : {1e-2, 5e-3, 2.5e-3}) {  // nested: each divides the last
    const auto r = welfare::centralized_optimum(sim, gains, step);
    CHECK(r.welfare >= previous - 1e-12);
    previous = r.welfare;
  }
}

TEST_CASE("leader oracle validation suite passes") {
  const auto suite = validation::run_leader_oracle_suite(62, 60);
  CHECK(suite.passed);
  CHECK(suite.checks == 60);
}
