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
#include "specshare/validation.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace specshare;
using channel::cvec;

namespace {

cvec make_cvec(std::initializer_list<std::complex<double>> entries) {
  cvec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

}  // namespace

TEST_CASE("path_loss follows the distance law") {
  CHECK(channel::path_loss(1.0, 3.5) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(channel::path_loss(2.0, 3.5) ==
        doctest::Approx(8.838834764831845e-05).epsilon(1e-12));
  CHECK(channel::path_loss(1.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // Strictly decreasing in distance.
  double prev = channel::path_loss(0.5, 3.5);
  for (double d = 0.6; d < 3.0; d += 0.1) {
    const double cur = channel::path_loss(d, 3.5);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK_THROWS_AS(channel::path_loss(0.0, 3.5), std::domain_error);
  CHECK_THROWS_AS(channel::path_loss(-1.0, 3.5), std::domain_error);
}

TEST_CASE("sample_channel is deterministic under a fixed seed") {
  const channel::Topology topo;
  std::mt19937_64 rng_a(99);
  std::mt19937_64 rng_b(99);
  const auto a = channel::sample_channel(topo, 4, rng_a);
  const auto b = channel::sample_channel(topo, 4, rng_b);
  CHECK(a.h_p == b.h_p);
  CHECK(a.h_ps == b.h_ps);
  CHECK(a.h_s == b.h_s);
  CHECK(a.g_p == b.g_p);
  CHECK(a.g_s == b.g_s);

  std::mt19937_64 rng_c(7);
  CHECK_THROWS_AS(channel::sample_channel(topo, 1, rng_c), std::invalid_argument);
}

TEST_CASE("sample second moments converge to the path-loss gains") {
  channel::Topology topo;  // d_pt_pr = 2, every ST link 1 m
  const int n = 4;
  const int draws = 100000;
  std::mt19937_64 rng(2026);
  double sum_hp2 = 0.0;
  double sum_hs2 = 0.0;
  for (int i = 0; i < draws; ++i) {
    const auto ch = channel::sample_channel(topo, n, rng);
    sum_hp2 += std::norm(ch.h_p);
    sum_hs2 += ch.h_s.squaredNorm();
  }
  const double mean_hp2 = sum_hp2 / draws;
  const double mean_hs2 = sum_hs2 / draws;
  CHECK(mean_hp2 == doctest::Approx(channel::path_loss(2.0, 3.5)).epsilon(0.02));
  CHECK(mean_hs2 == doctest::Approx(n * 1e-3).epsilon(0.02));
}

TEST_CASE("zf projectors act as expected on orthogonal and parallel inputs") {
  const cvec e0 = make_cvec({{1.0, 0.0}, {0.0, 0.0}});
  const cvec e1 = make_cvec({{0.0, 0.0}, {1.0, 0.0}});

  const auto [z_p, z_s] = channel::zf_projectors(e0, e1);
  CHECK((z_s * e1 - e1).norm() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK((z_p * e0 - e0).norm() == doctest::Approx(0.0).epsilon(1e-15));

  // Projecting a vector onto its own orthogonal complement annihilates it.
  const auto [zp2, zs2] = channel::zf_projectors(e0, e0);
  CHECK((zp2 * e0).norm() == doctest::Approx(0.0).epsilon(1e-15));

  const cvec zero = cvec::Zero(2);
  CHECK_THROWS_AS(channel::zf_projectors(zero, e1), channel::degenerate_channel_error);
  CHECK_THROWS_AS(channel::zf_projectors(e0, zero), channel::degenerate_channel_error);
  const cvec three = cvec::Ones(3);
  CHECK_THROWS_AS(channel::zf_projectors(e0, three), std::invalid_argument);
}

TEST_CASE("zf projectors are Hermitian and idempotent on random draws") {
  std::mt19937_64 rng(11);
  for (int n : {2, 4, 6}) {
    for (int i = 0; i < 25; ++i) {
      const auto f = channel::sample_unit_fading(n, rng);
      const auto [z_p, z_s] = channel::zf_projectors(f.g_p, f.g_s);
      CHECK((z_p - z_p.adjoint().eval()).norm() < 1e-12);
      CHECK((z_s - z_s.adjoint().eval()).norm() < 1e-12);
      CHECK((z_p * z_p - z_p).norm() < 1e-12);
      CHECK((z_s * z_s - z_s).norm() < 1e-12);
    }
  }
}

TEST_CASE("zf weights null the cross links and have unit norm") {
  const cvec e0 = make_cvec({{1.0, 0.0}, {0.0, 0.0}});
  const cvec e1 = make_cvec({{0.0, 0.0}, {1.0, 0.0}});
  const auto [w_p, w_s] = channel::zf_weights(e0, e1);
  CHECK((w_p - e0).norm() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK((w_s - e1).norm() == doctest::Approx(0.0).epsilon(1e-15));

  std::mt19937_64 rng(12);
  for (int n : {4, 6}) {
    for (int i = 0; i < 50; ++i) {
      const auto f = channel::sample_unit_fading(n, rng);
      const auto [wp, ws] = channel::zf_weights(f.g_p, f.g_s);
      CHECK(std::abs(ws.dot(f.g_p)) < 1e-10 * f.g_p.norm());
      CHECK(std::abs(wp.dot(f.g_s)) < 1e-10 * f.g_s.norm());
      CHECK(std::abs(wp.norm() - 1.0) < 1e-12);
      CHECK(std::abs(ws.norm() - 1.0) < 1e-12);
    }
  }

  CHECK_THROWS_AS(channel::zf_weights(e0, e0), channel::degenerate_channel_error);
  const cvec parallel = 3.0 * e0;
  CHECK_THROWS_AS(channel::zf_weights(e0, parallel), channel::degenerate_channel_error);
}

TEST_CASE("effective_gains reduces a realization to the five scalars") {
  const auto gains = channel::effective_gains(testing::toy_realization());
  CHECK(gains.h_p2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gains.h_ps2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gains.h_s2 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(gains.zf_gain_p == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gains.zf_gain_s == doctest::Approx(1.0).epsilon(1e-15));

  // Parallel g_p/g_s is a legitimate zero beamforming gain, not an error.
  auto parallel = testing::toy_realization();
  parallel.g_s = parallel.g_p;
  const auto zeroed = channel::effective_gains(parallel);
  CHECK(zeroed.zf_gain_p == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(zeroed.zf_gain_s == doctest::Approx(0.0).epsilon(1e-15));

  // Norm homogeneity: scaling h_s scales its energy gain by |c|^2.
  auto scaled = testing::toy_realization();
  scaled.h_s *= std::complex<double>(0.0, 3.0);
  CHECK(channel::effective_gains(scaled).h_s2 == doctest::Approx(18.0).epsilon(1e-12));

  auto degenerate = testing::toy_realization();
  degenerate.g_s.setZero();
  CHECK_THROWS_AS(channel::effective_gains(degenerate), channel::degenerate_channel_error);
}

TEST_CASE("zf beamforming gains never exceed the raw link norms") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto f = channel::sample_unit_fading(4, rng);
    channel::ChannelRealization ch{f.h_p, f.h_ps, f.h_s, f.g_p, f.g_s};
    const auto g = channel::effective_gains(ch);
    CHECK(g.zf_gain_p >= 0.0);
    CHECK(g.zf_gain_s >= 0.0);
    CHECK(g.zf_gain_p <= f.g_p.squaredNorm() + 1e-12);
    CHECK(g.zf_gain_s <= f.g_s.squaredNorm() + 1e-12);
  }
  // Equality on the upper bound iff the links are orthogonal.
  const cvec e0 = make_cvec({{1.0, 0.0}, {0.0, 0.0}});
  const cvec e1 = make_cvec({{0.0, 0.0}, {2.0, 0.0}});
  channel::ChannelRealization ch{{1.0, 0.0}, {1.0, 0.0}, e0, e0, e1};
  const auto g = channel::effective_gains(ch);
  CHECK(g.zf_gain_p == doctest::Approx(e0.squaredNorm()).epsilon(1e-15));
  CHECK(g.zf_gain_s == doctest::Approx(e1.squaredNorm()).epsilon(1e-15));
}

TEST_CASE("truncate_fading keeps the leading antenna entries") {
  std::mt19937_64 rng(14);
  const auto full = channel::sample_unit_fading(6, rng);
  const auto cut = channel::truncate_fading(full, 4);
  CHECK(cut.h_p == full.h_p);
  CHECK(cut.h_ps == full.h_ps);
  CHECK(cut.h_s.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(cut.h_s(i) == full.h_s(i));
    CHECK(cut.g_p(i) == full.g_p(i));
    CHECK(cut.g_s(i) == full.g_s(i));
  }
  CHECK_THROWS_AS(channel::truncate_fading(full, 7), std::invalid_argument);
  CHECK_THROWS_AS(channel::truncate_fading(full, 1), std::invalid_argument);
}

TEST_CASE("apply_topology scales each link by sqrt of its path loss") {
  std::mt19937_64 rng(15);
  const auto f = channel::sample_unit_fading(4, rng);
  channel::Topology topo;
  topo.d_pt_pr = 2.0;
  topo.d_st_sr = 1.4;
  const auto ch = channel::apply_topology(f, topo);
  const double s_pr = std::sqrt(channel::path_loss(2.0, topo.phi));
  const double s_sr = std::sqrt(channel::path_loss(1.4, topo.phi));
  CHECK(std::abs(ch.h_p) == doctest::Approx(std::abs(f.h_p) * s_pr).epsilon(1e-12));
  CHECK(ch.g_s.norm() == doctest::Approx(f.g_s.norm() * s_sr).epsilon(1e-12));

  channel::Topology bad;
  bad.d_st_sr = 0.0;
  CHECK_THROWS_AS(channel::apply_topology(f, bad), std::invalid_argument);
}

TEST_CASE("zf validation suite passes") {
  const auto suite = validation::run_zf_suite(31, 100);
  CHECK(suite.passed);
  CHECK(suite.checks == 300);
  CHECK(suite.max_error < 1e-12);
}
