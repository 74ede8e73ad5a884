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

#include "specshare/channel.hpp"

#include <cmath>

namespace specshare::channel {

namespace {

// Relative cutoff below which a projected direction counts as vanished.
constexpr double kParallelTol = 1e-12;

std::complex<double> draw_cn01(std::mt19937_64& rng) {
  // Circularly symmetric, unit total variance: each part has variance 1/2.
  std::normal_distribution<double> part(0.0, std::sqrt(0.5));
  const double re = part(rng);
  const double im = part(rng);
  return {re, im};
}

cvec draw_cn01_vec(int n, std::mt19937_64& rng) {
  cvec v(n);
  for (int i = 0; i < n; ++i) v(i) = draw_cn01(rng);
  return v;
}

// v minus its component along g; the action of (I - g g+ / ||g||^2).
cvec project_out(const cvec& v, const cvec& g) {
  const double g2 = g.squaredNorm();
  return v - g * (g.dot(v) / g2);
}

}  // namespace

void Topology::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("topology: ") + name + " must be > 0");
    }
  };
  positive(d_pt_pr, "d_pt_pr");
  positive(d_pt_st, "d_pt_st");
  positive(d_st_pr, "d_st_pr");
  positive(d_st_sr, "d_st_sr");
  positive(d_pt_sr, "d_pt_sr");
  positive(phi, "phi");
  positive(loss_coeff, "loss_coeff");
}

double path_loss(double d, double phi, double loss_coeff) {
  if (!(d > 0.0)) throw std::domain_error("path_loss: distance must be > 0");
  return loss_coeff * std::pow(d, -phi);
}

UnitFading sample_unit_fading(int n, std::mt19937_64& rng) {
  if (n < 2) {
    throw std::invalid_argument(
        "sample_unit_fading: ZF needs n >= 2 antennas at the ST");
  }
  UnitFading f;
  f.h_p = draw_cn01(rng);
  f.h_ps = draw_cn01(rng);
  f.h_s = draw_cn01_vec(n, rng);
  f.g_p = draw_cn01_vec(n, rng);
  f.g_s = draw_cn01_vec(n, rng);
  return f;
}

UnitFading truncate_fading(const UnitFading& fading, int n) {
  if (n < 2 || n > fading.h_s.size()) {
    throw std::invalid_argument("truncate_fading: need 2 <= n <= drawn size");
  }
  UnitFading f;
  f.h_p = fading.h_p;
  f.h_ps = fading.h_ps;
  f.h_s = fading.h_s.head(n);
  f.g_p = fading.g_p.head(n);
  f.g_s = fading.g_s.head(n);
  return f;
}

ChannelRealization apply_topology(const UnitFading& fading, const Topology& topo) {
  topo.validate();
  auto scale = [&](double d) {
    return std::sqrt(path_loss(d, topo.phi, topo.loss_coeff));
  };
  ChannelRealization ch;
  ch.h_p = fading.h_p * scale(topo.d_pt_pr);
  ch.h_ps = fading.h_ps * scale(topo.d_pt_sr);
  ch.h_s = fading.h_s * scale(topo.d_pt_st);
  ch.g_p = fading.g_p * scale(topo.d_st_pr);
  ch.g_s = fading.g_s * scale(topo.d_st_sr);
  return ch;
}

ChannelRealization sample_channel(const Topology& topo, int n, std::mt19937_64& rng) {
  return apply_topology(sample_unit_fading(n, rng), topo);
}

std::pair<cmat, cmat> zf_projectors(const cvec& g_p, const cvec& g_s) {
  if (g_p.size() != g_s.size() || g_p.size() < 2) {
    throw std::invalid_argument("zf_projectors: g_p, g_s must share length N >= 2");
  }
  const double gp2 = g_p.squaredNorm();
  const double gs2 = g_s.squaredNorm();
  if (gp2 == 0.0 || gs2 == 0.0) {
    throw degenerate_channel_error("zf_projectors: zero-norm link vector");
  }
  const auto n = g_p.size();
  const cmat identity = cmat::Identity(n, n);
  cmat z_p = identity - (g_s * g_s.adjoint()) / gs2;
  cmat z_s = identity - (g_p * g_p.adjoint()) / gp2;
  return {std::move(z_p), std::move(z_s)};
}

std::pair<cvec, cvec> zf_weights(const cvec& g_p, const cvec& g_s) {
  if (g_p.size() != g_s.size() || g_p.size() < 2) {
    throw std::invalid_argument("zf_weights: g_p, g_s must share length N >= 2");
  }
  if (g_p.squaredNorm() == 0.0 || g_s.squaredNorm() == 0.0) {
    throw degenerate_channel_error("zf_weights: zero-norm link vector");
  }
  cvec proj_p = project_out(g_p, g_s);  // Z_P-perp g_P
  cvec proj_s = project_out(g_s, g_p);  // Z_S-perp g_S
  const double np = proj_p.norm();
  const double ns = proj_s.norm();
  if (np <= kParallelTol * g_p.norm() || ns <= kParallelTol * g_s.norm()) {
    throw degenerate_channel_error("zf_weights: g_p and g_s are parallel");
  }
  return {proj_p / np, proj_s / ns};
}

EffectiveGains effective_gains(const ChannelRealization& ch) {
  if (ch.h_s.size() != ch.g_p.size() || ch.h_s.size() != ch.g_s.size() ||
      ch.h_s.size() < 2) {
    throw std::invalid_argument("effective_gains: antenna vectors must share length N >= 2");
  }
  const double gp2 = ch.g_p.squaredNorm();
  const double gs2 = ch.g_s.squaredNorm();
  if (gp2 == 0.0 || gs2 == 0.0) {
    throw degenerate_channel_error("effective_gains: zero-norm link vector");
  }
  EffectiveGains g;
  g.h_p2 = std::norm(ch.h_p);
  g.h_ps2 = std::norm(ch.h_ps);
  g.h_s2 = ch.h_s.squaredNorm();
  // ||(I - g g+/||g||^2) v||^2 = ||v||^2 - |g+ v|^2 / ||g||^2, clamped so
  // near-parallel draws cannot go negative through cancellation.
  const double cross = std::norm(ch.g_s.dot(ch.g_p));  // |g_s+ g_p|^2
  g.zf_gain_p = std::max(0.0, gp2 - cross / gs2);
  g.zf_gain_s = std::max(0.0, gs2 - cross / gp2);
  return g;
}

}  // namespace specshare::channel
