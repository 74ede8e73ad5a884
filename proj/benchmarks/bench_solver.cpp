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

#include "specshare/experiments.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace specshare;

rates::SystemParams bench_params() {
  rates::SystemParams p;
  p.p = 1000.0;
  p.eta = 0.5;
  p.e0 = 10.0;
  p.lambda_p = 100.0;
  p.lambda_s = 100.0;
  p.antennas = 6;
  return p;
}

channel::EffectiveGains bench_gains(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return channel::effective_gains(channel::sample_channel(channel::Topology{}, 6, rng));
}

void BM_SampleChannel(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const channel::Topology topo;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ch = channel::sample_channel(topo, n, rng);
    benchmark::DoNotOptimize(ch);
  }
}
BENCHMARK(BM_SampleChannel)->Arg(2)->Arg(4)->Arg(6);

void BM_EffectiveGains(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto ch = channel::sample_channel(channel::Topology{}, 6, rng);
  for (auto _ : state) {
    auto g = channel::effective_gains(ch);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_EffectiveGains);

void BM_FollowerBestBeta(benchmark::State& state) {
  const auto params = bench_params();
  const auto gains = bench_gains(3);
  const auto aux = game::aux_terms(0.4, params, gains);
  const double mu = 0.5 * (aux.validity_floor() + aux.saturation_price());
  for (auto _ : state) {
    auto f = game::follower_best_beta(mu, 0.4, params, gains);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FollowerBestBeta);

void BM_LeaderPrice(benchmark::State& state) {
  const auto params = bench_params();
  const auto gains = bench_gains(4);
  for (auto _ : state) {
    auto p = game::leader_price(0.4, params, gains);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_LeaderPrice);

void BM_StackelbergEquilibrium(benchmark::State& state) {
  const auto params = bench_params();
  const auto gains = bench_gains(5);
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto eq = game::stackelberg_equilibrium(params, gains, step);
    benchmark::DoNotOptimize(eq);
  }
}
BENCHMARK(BM_StackelbergEquilibrium)->Arg(200)->Arg(1000);

void BM_CentralizedOptimum(benchmark::State& state) {
  const auto params = bench_params();
  const auto gains = bench_gains(6);
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto w = welfare::centralized_optimum(params, gains, step);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_CentralizedOptimum)->Arg(200)->Arg(500);

void BM_RunTrial(benchmark::State& state) {
  experiments::ExperimentConfig cfg;
  cfg.params = bench_params();
  cfg.grid_step = 5e-3;
  cfg.realizations = 1 << 20;
  int trial = 0;
  for (auto _ : state) {
    auto rec = experiments::run_trial(cfg, trial++);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_RunTrial);

}  // namespace

BENCHMARK_MAIN();
