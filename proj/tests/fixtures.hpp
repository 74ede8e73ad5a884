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

#ifndef SPECSHARE_TESTS_FIXTURES_HPP
#define SPECSHARE_TESTS_FIXTURES_HPP

#include "specshare/experiments.hpp"

namespace specshare::testing {

// Hand-checkable fixture: N=2 orthogonal ST links, unit scalar links,
// P=10, sigma^2=1, eta=0.5, E0=1, unit rate weights.
inline channel::ChannelRealization toy_realization() {
  channel::ChannelRealization ch;
  ch.h_p = {1.0, 0.0};
  ch.h_ps = {1.0, 0.0};
  ch.h_s.resize(2);
  ch.h_s << std::complex<double>(1.0, 0.0), std::complex<double>(1.0, 0.0);
  ch.g_p.resize(2);
  ch.g_p << std::complex<double>(1.0, 0.0), std::complex<double>(0.0, 0.0);
  ch.g_s.resize(2);
  ch.g_s << std::complex<double>(0.0, 0.0), std::complex<double>(1.0, 0.0);
  return ch;
}

inline channel::EffectiveGains toy_gains() {
  return {.h_p2 = 1.0, .h_ps2 = 1.0, .h_s2 = 2.0, .zf_gain_p = 1.0, .zf_gain_s = 1.0};
}

inline rates::SystemParams toy_params() {
  rates::SystemParams p;
  p.p = 10.0;
  p.sigma2 = 1.0;
  p.eta = 0.5;
  p.e0 = 1.0;
  p.lambda_p = 1.0;
  p.lambda_s = 1.0;
  p.antennas = 2;
  return p;
}

// The simulation defaults: P = 30 dB, E0 = 10 dB, sigma^2 = 1, eta = 0.5,
// lambda_P = lambda_S = 100, N = 6, phi = 3.5, PT-PR 2 m, ST links 1 m.
inline rates::SystemParams sim_params(int antennas = 6) {
  rates::SystemParams p;
  p.p = 1000.0;
  p.sigma2 = 1.0;
  p.eta = 0.5;
  p.e0 = 10.0;
  p.lambda_p = 100.0;
  p.lambda_s = 100.0;
  p.antennas = antennas;
  return p;
}

inline channel::Topology sim_topology() { return channel::Topology{}; }

inline experiments::ExperimentConfig sim_config(int antennas = 6) {
  experiments::ExperimentConfig cfg;
  cfg.params = sim_params(antennas);
  cfg.topology = sim_topology();
  return cfg;
}

// Effective gains of one simulation-scale draw, for tests that need a fixed
// realization without running the sampler.
inline channel::EffectiveGains sim_scale_gains() {
  return {.h_p2 = 1.1e-4,
          .h_ps2 = 8.2e-4,
          .h_s2 = 6.4e-3,
          .zf_gain_p = 4.8e-3,
          .zf_gain_s = 3.9e-3};
}

}  // namespace specshare::testing

#endif  // SPECSHARE_TESTS_FIXTURES_HPP
