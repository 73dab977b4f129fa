/*
 * Copyright 2026 The fssboost Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>

#include <gtest/gtest.h>

#include "fssboost/errors.hpp"
#include "fssboost/lut.hpp"
#include "fssboost/reference.hpp"
#include "test_util.hpp"

namespace fssboost {
namespace {

using testing::enc;
using testing::reveal;
using testing::share_all;
using testing::two_party;

TEST(SigmoidPlain, Examples) {
  EXPECT_NEAR(sigmoid_plain(-10.0, 12), 0.006693, 1e-6);
  EXPECT_NEAR(sigmoid_plain(-10.0, 5), 0.006693, 1e-6);
  EXPECT_EQ(sigmoid_plain(0.0, 12), 0.5);
  EXPECT_EQ(sigmoid_plain(0.8, 12), 0.5);
  EXPECT_NEAR(sigmoid_plain(100.0, 12), 0.993307, 1e-6);
  EXPECT_THROW(sigmoid_plain(0.0, 0), UsageError);
}

TEST(LeafWeightPlain, Examples) {
  EXPECT_EQ(leafweight_plain(0.0, 3.0, 1.0, 12), 0.0);
  EXPECT_NEAR(leafweight_plain(-2.0, 1.0, 1.0, 12), 5.0 / 6.0, 1e-12);
  EXPECT_EQ(leafweight_plain(100.0, 1.0, 1.0, 12), -5.0);
  EXPECT_EQ(leafweight_plain(-100.0, 1.0, 1.0, 12), 5.0);
}

TEST(Tables, EntriesAndShape) {
  const RingConfig cfg;
  const auto t = SigmoidTable::build(12, cfg);
  ASSERT_EQ(t.p.size(), 13U);
  EXPECT_EQ(t.p[6], enc(0.5));
  EXPECT_EQ(t.h[6], enc(0.25));
  for (std::size_t i = 1; i < t.p.size(); ++i) EXPECT_GE(t.p[i], t.p[i - 1]);
  const auto w = LeafWeightTable::build(12, 1.0, cfg);
  EXPECT_EQ(w.w.front(), enc(-5.0));
  EXPECT_EQ(w.w.back(), enc(5.0));
  EXPECT_EQ(SigmoidTable::coarse(std::vector<Word>{65536, 3}, 5), (std::vector<Word>{2048, 0}));
}

TEST(SigmoidFixed, AgreesWithPlainOnEncodedInputs) {
  const RingConfig cfg;
  CtrPrg rng(Block{1, 0}, Block{});
  for (int i = 0; i < 10000; ++i) {
    const Word x = cfg.from_signed(static_cast<std::int64_t>(rng.uniform(1ULL << 21)) - (1LL << 20));
    const double xr = decode(x, cfg);
    ASSERT_EQ(sigmoid_segment_fixed(x, 12, cfg), sigmoid_segment_plain(xr, 12)) << xr;
  }
  // Exact segment starts belong to the upper segment.
  for (int i = 0; i <= 12; ++i) {
    const double w = segment_point(i, 12);
    const double scaled = w * 65536.0;
    if (scaled != std::floor(scaled)) continue;
    EXPECT_EQ(sigmoid_segment_fixed(enc(w), 12, cfg), i);
  }
}

TEST(LeafWeightFixed, AgreesWithPiecewiseOracle) {
  const RingConfig cfg;
  CtrPrg rng(Block{2, 0}, Block{});
  for (int n : {4, 12, 16}) {
    std::vector<std::int64_t> bounds;
    for (int i = 1; i <= n; ++i) bounds.push_back(10 * i - 5 * n);
    const auto table = LeafWeightTable::build(n, 1.0, cfg);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::int64_t G = static_cast<std::int64_t>(rng.uniform(2000)) - 1000;
      const std::int64_t H = static_cast<std::int64_t>(rng.uniform(400));
      const std::int64_t one = 65536;
      // t >= w_i  <=>  -n G >= (10 i - 5 n)(H + gamma), here with gamma = 1.
      std::size_t j = 0;
      for (auto b : bounds) j += static_cast<std::size_t>(-n * G >= b * (H + 1));
      const Word got =
          leafweight_fixed(cfg.from_signed(G * one), cfg.from_signed(H * one), one, table, cfg);
      ASSERT_EQ(got, table.w[j]) << "G=" << G << " H=" << H << " n=" << n;
    }
  }
}

TEST(SigmoidOnline, Examples) {
  const RingConfig cfg;
  const auto table = SigmoidTable::build(12, cfg);
  const Shares x = {enc(-10), enc(0), enc(100)};
  const auto xs = share_all(x, cfg);
  auto r = two_party([&](Session& s) { return sigmoid_online(s, xs[s.index()], table); });
  const Shares p = reveal(r.outputs, cfg);
  EXPECT_EQ(p[0], enc(sigmoid(-5.0)));
  EXPECT_EQ(p[1], enc(0.5));
  EXPECT_EQ(p[2], enc(sigmoid(5.0)));
}

TEST(SigmoidOnline, OneRoundNEllBitsPerElement) {
  const RingConfig cfg;
  const auto table = SigmoidTable::build(12, cfg);
  const Shares x = {enc(1.5)};
  const auto xs = share_all(x, cfg);
  auto r = two_party([&](Session& s) { return sigmoid_online(s, xs[s.index()], table); });
  for (const auto& m : r.meters) {
    EXPECT_EQ(m.rounds, 1U);
    EXPECT_EQ(m.bits, 12U * 64);
    EXPECT_EQ(m.bytes, 96U);
  }
}

TEST(SigmoidOnline, RandomInputsMatchMirrorExactly) {
  const RingConfig cfg;
  const auto table = SigmoidTable::build(12, cfg);
  CtrPrg rng(Block{4, 4}, Block{});
  Shares x(2000);
  for (auto& v : x) v = cfg.from_signed(static_cast<std::int64_t>(rng.uniform(1ULL << 20)) - (1LL << 19));
  const auto xs = share_all(x, cfg);
  auto r = two_party([&](Session& s) { return sigmoid_online(s, xs[s.index()], table); });
  const Shares p = reveal(r.outputs, cfg);
  for (std::size_t i = 0; i < x.size(); ++i) {
    ASSERT_EQ(p[i], sigmoid_fixed(x[i], table, cfg));
    ASSERT_LE(std::fabs(decode(p[i], cfg) - sigmoid(decode(x[i], cfg))), 0.21);
  }
}

TEST(LeafWeightOnline, Examples) {
  const RingConfig cfg;
  const auto table = LeafWeightTable::build(12, 1.0, cfg);
  const Shares G = {enc(0), enc(-2), enc(0), enc(100)};
  const Shares H = {enc(1), enc(1), enc(0), enc(1)};
  const auto gs = share_all(G, cfg, 1), hs = share_all(H, cfg, 2);
  auto r = two_party([&](Session& s) {
    return leafweight_online(s, gs[s.index()], hs[s.index()], enc(1.0), table);
  });
  const Shares w = reveal(r.outputs, cfg);
  EXPECT_EQ(w[0], enc(0));
  EXPECT_EQ(w[1], enc(-5.0 + 70.0 / 12.0));
  EXPECT_EQ(w[2], enc(0));
  EXPECT_EQ(w[3], enc(-5));
  EXPECT_EQ(r.meters[0].rounds, 1U);
  EXPECT_EQ(r.meters[0].bits, 4U * 12 * 64);
}

TEST(Brute, PiecewiseTableMatchesLutSelect) {
  const RingConfig cfg;
  const std::vector<std::int64_t> bounds = {-3, 0, 4};
  const std::vector<Word> table = {10, 20, 30, 40};
  for (std::int64_t x = -6; x <= 6; ++x) {
    const Word want = x < -3 ? 10 : x < 0 ? 20 : x < 4 ? 30 : 40;
    EXPECT_EQ(brute::piecewise(bounds, table, x), want);
  }
}

}  // namespace
}  // namespace fssboost
