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
#include "fssboost/gain.hpp"
#include "test_util.hpp"

namespace fssboost {
namespace {

using testing::reveal;
using testing::share_all;
using testing::two_party;

TEST(GainPlain, Examples) {
  EXPECT_EQ(gain_plain(0, 0, 1, 3, 4, 1), 0.0);
  EXPECT_EQ(gain_plain(2, -1, 1, 3, 4, 1), 18.0);
  EXPECT_EQ(gain_plain(0.5, 0.5, 2, 2, 4, 1), -1.5);
}

TEST(ExactGainPlain, Examples) {
  EXPECT_EQ(exact_gain_plain(0, 0, 0, 1, 3, 4, 1), 0.0);
  EXPECT_NEAR(exact_gain_plain(2, -1, 1, 1, 3, 4, 1), 1.025, 1e-12);
  EXPECT_NEAR(exact_gain_plain(0.5, 0.5, 1, 2, 2, 4, 1), -1.0 / 60.0, 1e-12);
}

// Integers at k fraction bits.
Word at_scale(double x, int k, const RingConfig& cfg) {
  return cfg.from_signed(std::llround(std::ldexp(x, k)));
}

TEST(GainFixed, IsGainPlainAtScaleThreeK) {
  const RingConfig cfg;
  const int k = 8;
  CtrPrg rng(Block{1, 1}, Block{});
  for (int i = 0; i < 10000; ++i) {
    auto q = [&](std::uint64_t range) {
      return (static_cast<double>(rng.uniform(2 * range)) - static_cast<double>(range)) / 256.0;
    };
    const double GL = q(4096), GR = q(4096);
    const double HL = static_cast<double>(rng.uniform(4096)) / 256.0;
    const double HR = static_cast<double>(rng.uniform(4096)) / 256.0;
    FixedAggregates a{at_scale(GL, k, cfg), at_scale(GR, k, cfg), at_scale(HL, k, cfg),
                      at_scale(HR, k, cfg), at_scale(HL + HR, k, cfg)};
    const Word g = gain_fixed(a, at_scale(1.0, k, cfg), cfg);
    ASSERT_EQ(static_cast<double>(cfg.to_signed(g)),
              std::ldexp(gain_plain(GL, GR, HL, HR, HL + HR, 1.0), 3 * k));
  }
}

TEST(GainOnline, ExamplesAtFullPrecision) {
  const RingConfig cfg;
  const int k = cfg.ell_f;
  struct Case {
    double GL, GR, HL, HR, want;
  };
  const Case cases[] = {{0, 0, 1, 3, 0}, {2, -1, 1, 3, 18}, {0.5, 0.5, 2, 2, -1.5}};
  Shares GL, GR, HL, HR, HX;
  for (const auto& c : cases) {
    GL.push_back(at_scale(c.GL, k, cfg));
    GR.push_back(at_scale(c.GR, k, cfg));
    HL.push_back(at_scale(c.HL, k, cfg));
    HR.push_back(at_scale(c.HR, k, cfg));
    HX.push_back(at_scale(c.HL + c.HR, k, cfg));
  }
  const auto a = share_all(GL, cfg, 1), b = share_all(GR, cfg, 2), c = share_all(HL, cfg, 3),
             d = share_all(HR, cfg, 4), e = share_all(HX, cfg, 5);
  auto r = two_party([&](Session& s) {
    const int i = s.index();
    return gain_online(s, AggregateShares{a[i], b[i], c[i], d[i], e[i]}, at_scale(1.0, k, cfg));
  });
  const Shares g = reveal(r.outputs, cfg);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(std::ldexp(static_cast<double>(cfg.to_signed(g[i])), -3 * k), cases[i].want);
  }
  for (const auto& m : r.meters) {
    EXPECT_EQ(m.rounds, 3U);
    EXPECT_EQ(m.bits, 3U * 9 * 64);
  }
}

TEST(GainOnline, MatchesGainFixedOnRandomAggregates) {
  const RingConfig cfg;
  const int k = 11;
  CtrPrg rng(Block{2, 2}, Block{});
  const std::size_t n = 2000;
  Shares GL(n), GR(n), HL(n), HR(n), HX(n), want(n);
  const Word gamma = at_scale(1.0, k, cfg);
  for (std::size_t i = 0; i < n; ++i) {
    // Aggregates of up to 560 samples: |G| <= N 2^k, 0 <= H <= N 2^k / 4.
    const std::uint64_t lim = 560ULL << k;
    GL[i] = cfg.from_signed(static_cast<std::int64_t>(rng.uniform(2 * lim)) - static_cast<std::int64_t>(lim));
    GR[i] = cfg.from_signed(static_cast<std::int64_t>(rng.uniform(2 * lim)) - static_cast<std::int64_t>(lim));
    HL[i] = rng.uniform(lim / 4);
    HR[i] = rng.uniform(lim / 4);
    HX[i] = HL[i] + HR[i];
    want[i] = gain_fixed({GL[i], GR[i], HL[i], HR[i], HX[i]}, gamma, cfg);
  }
  const auto a = share_all(GL, cfg, 1), b = share_all(GR, cfg, 2), c = share_all(HL, cfg, 3),
             d = share_all(HR, cfg, 4), e = share_all(HX, cfg, 5);
  auto r = two_party([&](Session& s) {
    const int i = s.index();
    return gain_online(s, AggregateShares{a[i], b[i], c[i], d[i], e[i]}, gamma);
  });
  EXPECT_EQ(reveal(r.outputs, cfg), want);
}

TEST(GainProperties, SignRule) {
  CtrPrg rng(Block{3, 3}, Block{});
  for (int i = 0; i < 10000; ++i) {
    const double GL = rng.uniform(2001) / 100.0 - 10.0, GR = rng.uniform(2001) / 100.0 - 10.0;
    const double HL = rng.uniform(1001) / 100.0, HR = rng.uniform(1001) / 100.0;
    const double g = gain_plain(GL, GR, HL, HR, HL + HR, 1.0);
    const double gstar = (HR + 1.0) * GL * GL + (HL + 1.0) * GR * GR;
    ASSERT_GE(gstar, 0.0);
    ASSERT_EQ(g > 0, 2 * HL < HL + HR && gstar != 0);
  }
}

int sign(double x) { return (x > 0) - (x < 0); }

// With equal H_L (so equal H_R) the score is +-G*, and G* is the exact gain
// up to a positive factor. The ordering therefore agrees with the exact gain
// when 2 H_L < H_X and is reversed otherwise.
TEST(GainProperties, OrderingWithEqualLeftHessians) {
  CtrPrg rng(Block{4, 4}, Block{});
  int positive = 0, negative = 0;
  for (int i = 0; i < 10000; ++i) {
    const double HL = rng.uniform(1001) / 100.0, HR = rng.uniform(1001) / 100.0, HX = HL + HR;
    const double GX = rng.uniform(2001) / 100.0 - 10.0;
    const double a = rng.uniform(2001) / 100.0 - 10.0, b = rng.uniform(2001) / 100.0 - 10.0;
    const int approx = sign(gain_plain(a, GX - a, HL, HR, HX, 1.0) - gain_plain(b, GX - b, HL, HR, HX, 1.0));
    const int exact = sign(exact_gain_plain(a, GX - a, GX, HL, HR, HX, 1.0) -
                           exact_gain_plain(b, GX - b, GX, HL, HR, HX, 1.0));
    if (exact == 0) continue;
    if (2 * HL < HX) {
      ASSERT_EQ(approx, exact);
      ++positive;
    } else {
      ASSERT_EQ(approx, -exact);
      ++negative;
    }
  }
  EXPECT_GT(positive, 1000);
  EXPECT_GT(negative, 1000);
}

// Worst-case score (N 2^k)^2 (N 2^k + gamma 2^k) against 2^(ell-2) in exact integers.
bool fits_oracle(std::uint64_t n, int k, std::uint64_t gamma) {
  __extension__ typedef unsigned __int128 U;
  const U t = static_cast<U>(n) << k;
  const U bound = t * t * (t + (static_cast<U>(gamma) << k));
  return bound < (static_cast<U>(1) << 62);
}

TEST(GainPrecision, LargestSafeK) {
  const RingConfig cfg;
  for (std::uint64_t n : {1ULL, 10ULL, 200ULL, 560ULL, 1000ULL, 100000ULL}) {
    int want = 0;
    for (int k = 1; k <= cfg.ell_f; ++k) {
      if (fits_oracle(n, k, 1)) want = k;
    }
    EXPECT_EQ(gain_precision(n, 1.0, cfg), want) << "N=" << n;
  }
  EXPECT_EQ(gain_precision(560, 1.0, cfg), 11);
  EXPECT_EQ(gain_precision(200, 1.0, cfg), 13);
  EXPECT_THROW(gain_precision(1ULL << 22, 1.0, cfg), SetupError);
  EXPECT_FALSE(gain_precision_fits(560, 1.0, 12, cfg));
}

}  // namespace
}  // namespace fssboost
