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

#include "fssboost/aggregate.hpp"
#include "fssboost/errors.hpp"
#include "fssboost/reference.hpp"
#include "test_util.hpp"

namespace fssboost {
namespace {

using testing::enc;
using testing::kSmallRing;
using testing::reveal;
using testing::share_all;
using testing::two_party;

// Key shares for explicit masks, split with arbitrary randomness.
std::array<AggKeyShare, 2> make_key(Word rs, Word rg, const RingConfig& cfg, CtrPrg& rng) {
  const Word v = static_cast<Word>(msb(rg, cfg.ell_c()));
  const Word plain[5] = {rs, rg, rs * rg, v, rs * v};
  Word r[5];
  for (auto& x : r) x = rng.next_bits(cfg.ell);
  AggKeyShare k0{cfg.sub(plain[0], r[0]), cfg.sub(plain[1], r[1]), cfg.sub(plain[2], r[2]),
                 cfg.sub(plain[3], r[3]), cfg.sub(plain[4], r[4])};
  AggKeyShare k1{r[0], r[1], r[2], r[3], r[4]};
  return {k0, k1};
}

Word one_element(Word s, std::int64_t g, Word rs, Word rg, const RingConfig& cfg, CtrPrg& rng) {
  const auto key = make_key(rs, rg, cfg, rng);
  const Word ss = rng.next_bits(cfg.ell), gs = rng.next_bits(cfg.ell);
  const auto m0 = agg_mask(0, cfg.sub(s, ss), cfg.sub(cfg.from_signed(g), gs), key[0], cfg);
  const auto m1 = agg_mask(1, ss, gs, key[1], cfg);
  const Word s_hat = (m0.s_hat + m1.s_hat) & 1U;
  const Word g_hat = (m0.g_hat + m1.g_hat) & cfg.compressed_mask();
  return cfg.add(agg_combine(0, s_hat, g_hat, key[0], cfg), agg_combine(1, s_hat, g_hat, key[1], cfg));
}

TEST(AggregateAlgebra, ExhaustiveSmallRing) {
  const RingConfig& cfg = kSmallRing;
  CtrPrg rng(Block{1, 9}, Block{});
  int cases = 0;
  for (Word s = 0; s < 2; ++s) {
    for (std::int64_t g = -8; g < 8; ++g) {
      for (Word rs = 0; rs < 2; ++rs) {
        for (Word rg = 0; rg < 32; ++rg, ++cases) {
          ASSERT_EQ(one_element(s, g, rs, rg, cfg, rng), brute::compressed_mul(int(s), g, cfg))
              << "s=" << s << " g=" << g << " rs=" << rs << " rg=" << rg;
        }
      }
    }
  }
  EXPECT_EQ(cases, 2048);
}

TEST(AggregateAlgebra, RandomFullRing) {
  const RingConfig cfg;
  CtrPrg rng(Block{2, 9}, Block{});
  for (int i = 0; i < 100000; ++i) {
    const Word s = rng.next_bit();
    const std::int64_t g = static_cast<std::int64_t>(rng.uniform(1ULL << 17)) - (1LL << 16);
    const Word rs = rng.next_bit(), rg = rng.next_bits(cfg.ell_c());
    ASSERT_EQ(one_element(s, g, rs, rg, cfg, rng), brute::compressed_mul(int(s), g, cfg));
  }
}

TEST(AggOffline, EmptyAndSelfTest) {
  const RingConfig cfg;
  Dealer dealer(Block{3, 3}, cfg);
  EXPECT_EQ(agg_offline(0, dealer)[0].size(), 0U);
  const auto keys = agg_offline(500, dealer);
  for (std::size_t i = 0; i < 500; ++i) {
    const auto& a = keys[0].peek()[i];
    const auto& b = keys[1].peek()[i];
    const Word rs = cfg.add(a.rs, b.rs), rg = cfg.add(a.rg, b.rg);
    ASSERT_LE(rs, 1U);
    ASSERT_LE(rg, cfg.compressed_mask());
    ASSERT_EQ(cfg.add(a.u, b.u), cfg.mul(rs, rg));
    const Word v = static_cast<Word>(msb(rg, cfg.ell_c()));
    ASSERT_EQ(cfg.add(a.v, b.v), v);
    ASSERT_EQ(cfg.add(a.m, b.m), rs * v);
  }
}

TEST(AggOnline, Examples) {
  const RingConfig cfg;
  const Shares s1 = {1, 0, 1}, g1 = {enc(0.5), enc(-0.25), enc(0.75)};
  const Shares s2 = {0, 0, 0}, g2 = {enc(0.9), enc(-1.0), enc(0.3)};
  const auto a = share_all(s1, cfg, 1), b = share_all(g1, cfg, 2);
  const auto c = share_all(s2, cfg, 3), d = share_all(g2, cfg, 4);
  auto r = two_party([&](Session& s) {
    const int i = s.index();
    return Shares{agg_online(s, a[i], b[i]), agg_online(s, c[i], d[i])};
  });
  EXPECT_EQ(reveal(r.outputs, cfg), (Shares{enc(1.25), 0}));
}

TEST(AggOnline, RandomDotProducts) {
  const RingConfig cfg;
  CtrPrg rng(Block{7, 7}, Block{});
  Shares s(3000), g(3000);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = rng.next_bit();
    g[i] = cfg.from_signed(static_cast<std::int64_t>(rng.uniform(1ULL << 17)) - (1LL << 16));
  }
  const auto ss = share_all(s, cfg, 1), gs = share_all(g, cfg, 2);
  auto r = two_party([&](Session& sess) { return agg_online(sess, ss[sess.index()], gs[sess.index()]); });
  EXPECT_EQ(cfg.add(r.outputs[0], r.outputs[1]), brute::dot(s, g, cfg));
}

TEST(AggOnline, NineteenBitsPerElementOneRound) {
  const RingConfig cfg;
  const Shares s(100, 1), g(100, enc(0.5));
  const auto ss = share_all(s, cfg, 1), gs = share_all(g, cfg, 2);
  auto r = two_party([&](Session& sess) { return agg_online(sess, ss[sess.index()], gs[sess.index()]); });
  for (const auto& m : r.meters) {
    EXPECT_EQ(m.rounds, 1U);
    EXPECT_EQ(m.bits, 100U * 19);
    EXPECT_EQ(m.bytes, (100U * 19 + 7) / 8);
  }
}

TEST(AggBatch, OneSumPerRequest) {
  const RingConfig cfg;
  const Shares s = {1, 1, 0, 1}, g = {enc(0.25), enc(0.5), enc(-1), enc(-0.125)};
  const auto ss = share_all(s, cfg, 1), gs = share_all(g, cfg, 2);
  auto r = two_party([&](Session& sess) {
    const int i = sess.index();
    std::span<const Word> a(ss[i]), b(gs[i]);
    const AggRequest req[2] = {{a.subspan(0, 2), b.subspan(0, 2)}, {a.subspan(2), b.subspan(2)}};
    return agg_batch(sess, req);
  });
  EXPECT_EQ(reveal(r.outputs, cfg), (Shares{enc(0.75), enc(-0.125)}));
  EXPECT_EQ(r.meters[0].rounds, 1U);
}

TEST(AggBatch, LengthMismatchIsUsageError) {
  auto body = [](Session& s) {
    const Shares a(2), b(3);
    return agg_online(s, a, b);
  };
  EXPECT_THROW(two_party(body), UsageError);
}

}  // namespace
}  // namespace fssboost
