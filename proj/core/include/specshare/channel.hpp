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

#ifndef SPECSHARE_CHANNEL_HPP
#define SPECSHARE_CHANNEL_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

namespace specshare::channel {

using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;

/// Raised when a channel draw or fixture cannot support zero forcing
/// (zero-norm link vector, or gP parallel to gS when weights are needed).
struct degenerate_channel_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Node geometry and the distance-dependent path-loss law L(d) = c * d^-phi.
/// Distances are in meters. The ST-to-SR distance is the usual sweep variable.
struct Topology {
  double d_pt_pr = 2.0;  // PT <-> PR
  double d_pt_st = 1.0;  // PT <-> ST
  double d_st_pr = 1.0;  // ST <-> PR
  double d_st_sr = 1.0;  // ST <-> SR
  double d_pt_sr = 1.0;  // PT <-> SR
  double phi = 3.5;      // path-loss exponent
  double loss_coeff = 1e-3;

  void validate() const;
};

/// One quasi-static block: scalar PT->PR and PT->SR links plus the three
/// N-antenna ST links. All entries are complex baseband gains.
struct ChannelRealization {
  std::complex<double> h_p;   // PT -> PR
  std::complex<double> h_ps;  // PT -> SR
  cvec h_s;                   // PT -> ST
  cvec g_p;                   // ST -> PR
  cvec g_s;                   // ST -> SR

  int antennas() const { return static_cast<int>(h_s.size()); }
};

/// Unit-variance fading for one block, before path-loss scaling. Kept
/// separate so that sweeps over a distance (or antenna count) can reuse the
/// same draw and stay paired across sweep values.
struct UnitFading {
  std::complex<double> h_p;
  std::complex<double> h_ps;
  cvec h_s;
  cvec g_p;
  cvec g_s;
};

/// The five nonnegative scalars that determine every rate and utility:
/// |h_P|^2, |h_PS|^2, ||h_S||^2 (MRC energy combining), and the two
/// zero-forcing beamforming gains ||Z_P-perp g_P||^2, ||Z_S-perp g_S||^2.
struct EffectiveGains {
  double h_p2 = 0.0;
  double h_ps2 = 0.0;
  double h_s2 = 0.0;
  double zf_gain_p = 0.0;
  double zf_gain_s = 0.0;
};

/// L(d) = loss_coeff * d^-phi. Throws std::domain_error for d <= 0.
double path_loss(double d, double phi, double loss_coeff = 1e-3);

/// Draws unit-variance circularly symmetric complex Gaussian fading for an
/// n-antenna ST (n >= 2; throws std::invalid_argument otherwise). Entry
/// order is fixed: h_p, h_ps, h_s, g_p, g_s.
UnitFading sample_unit_fading(int n, std::mt19937_64& rng);

/// Keeps the scalar links and the first n antenna entries of a wider draw.
UnitFading truncate_fading(const UnitFading& fading, int n);

/// Scales unit fading by sqrt(L(d)) per link, so E[|entry|^2] = L(d).
ChannelRealization apply_topology(const UnitFading& fading, const Topology& topo);

/// apply_topology(sample_unit_fading(n, rng), topo).
ChannelRealization sample_channel(const Topology& topo, int n, std::mt19937_64& rng);

/// Projection matrices (Z_P-perp, Z_S-perp): Z_P-perp nulls g_S (protects the
/// SR from the PT-bound stream), Z_S-perp nulls g_P. Both are Hermitian and
/// idempotent. Throws degenerate_channel_error on a zero-norm input.
std::pair<cmat, cmat> zf_projectors(const cvec& g_p, const cvec& g_s);

/// Unit-norm transmit weights (w_P, w_S) with w_P+ g_S = 0 and w_S+ g_P = 0.
/// Throws degenerate_channel_error when g_P and g_S are (numerically)
/// parallel, since the projected direction vanishes.
std::pair<cvec, cvec> zf_weights(const cvec& g_p, const cvec& g_s);

/// Reduces a realization to EffectiveGains. Parallel g_P/g_S legitimately
/// yields a zero beamforming gain here; only zero-norm inputs throw.
EffectiveGains effective_gains(const ChannelRealization& ch);

}  // namespace specshare::channel

#endif  // SPECSHARE_CHANNEL_HPP
