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

#include <gtest/gtest.h>

#include "fssboost/errors.hpp"
#include "fssboost/mpc.hpp"
#include "test_util.hpp"

namespace fssboost {
namespace {

using testing::reveal;
using testing::share_all;
using testing::two_party;

Shares random_words(std::size_t n, int bits, std::uint64_t seed) {
  CtrPrg rng(Block{seed, 17}, Block{});
  Shares out(n);
  for (auto& w : out) w = rng.next_bits(bits);
  return out;
}

TEST(OpenValues, OneRoundKellBits) {
  const RingConfig cfg;
  const Shares xs = {1, 2, 3, 4, 5};
  const auto sh = share_all(xs, cfg);
  auto r = two_party([&](Session& s) { return open_values(s, sh[s.index()], cfg.ell); });
  EXPECT_EQ(r.outputs[0], xs);
  EXPECT_EQ(r.outputs[1], xs);
  for (const auto& m : r.meters) {
    EXPECT_EQ(m.rounds, 1U);
    EXPECT_EQ(m.bits, 5U * 64);
    EXPECT_EQ(m.bytes, 40U);
    EXPECT_EQ(m.header_bytes, 4U);
  }
}

TEST(OpenValues, SingleValueIsEllOverEightBytes) {
  const RingConfig cfg;
  const Shares xs = {42};
  const auto sh = share_all(xs, cfg);
  auto r = two_party([&](Session& s) { return open_values(s, sh[s.index()], cfg.ell); });
  EXPECT_EQ(r.meters[0].bytes, 8U);
  EXPECT_EQ(r.meters[1].rounds, 1U);
}

TEST(Round, EmptyRoundSendsNothing) {
  auto r = two_party([](Session& s) {
    Round round(s);
    round.run();
    return 0;
  });
  EXPECT_EQ(r.meters[0].rounds, 0U);
}

TEST(Mul, Examples) {
  const RingConfig cfg;
  const Shares x = {3, 0, 0}, y = {5, 123456789, cfg.neg(7)};
  const auto xs = share_all(x, cfg, 1), ys = share_all(y, cfg, 2);
  auto r = two_party([&](Session& s) { return mul(s, xs[s.index()], ys[s.index()]); });
  EXPECT_EQ(reveal(r.outputs, cfg), (Shares{15, 0, 0}));
  EXPECT_EQ(r.meters[0].bits, 3U * 2 * 64);
  EXPECT_EQ(r.meters[0].rounds, 1U);
}

TEST(Mul, RandomAgreesWithPlaintext) {
  const RingConfig cfg;
  const Shares x = random_words(1000, 64, 1), y = random_words(1000, 64, 2);
  const auto xs = share_all(x, cfg, 3), ys = share_all(y, cfg, 4);
  auto r = two_party([&](Session& s) { return mul(s, xs[s.index()], ys[s.index()]); });
  const Shares z = reveal(r.outputs, cfg);
  for (std::size_t i = 0; i < x.size(); ++i) ASSERT_EQ(z[i], cfg.mul(x[i], y[i]));
}

TEST(Square, RandomAgreesWithPlaintext) {
  const RingConfig cfg;
  const Shares x = random_words(500, 64, 5);
  const auto xs = share_all(x, cfg);
  auto r = two_party([&](Session& s) { return square(s, xs[s.index()]); });
  const Shares z = reveal(r.outputs, cfg);
  for (std::size_t i = 0; i < x.size(); ++i) ASSERT_EQ(z[i], cfg.mul(x[i], x[i]));
  EXPECT_EQ(r.meters[0].bits, 500U * 64);
}

TEST(Select, ExamplesAndRandomMux) {
  const RingConfig cfg;
  Shares b = {1, 0}, x = {11, 11}, y = {22, 22};
  const Shares rb = random_words(10000, 1, 6), rx = random_words(10000, 64, 7),
               ry = random_words(10000, 64, 8);
  b.insert(b.end(), rb.begin(), rb.end());
  x.insert(x.end(), rx.begin(), rx.end());
  y.insert(y.end(), ry.begin(), ry.end());
  const auto bs = share_all(b, cfg, 1), xs = share_all(x, cfg, 2), ys = share_all(y, cfg, 3);
  auto r = two_party(
      [&](Session& s) { return select(s, bs[s.index()], xs[s.index()], ys[s.index()]); });
  const Shares z = reveal(r.outputs, cfg);
  EXPECT_EQ(z[0], 11U);
  EXPECT_EQ(z[1], 22U);
  for (std::size_t i = 0; i < b.size(); ++i) ASSERT_EQ(z[i], b[i] ? x[i] : y[i]);
}

TEST(BitMul, AllBitPairsTwoBitsPerElement) {
  const RingConfig cfg;
  Shares a, b;
  for (int rep = 0; rep < 64; ++rep) {
    for (Word i = 0; i < 4; ++i) {
      a.push_back(i & 1);
      b.push_back(i >> 1);
    }
  }
  const auto as = share_all(a, cfg, 1), bs = share_all(b, cfg, 2);
  auto r = two_party([&](Session& s) { return bit_mul(s, as[s.index()], bs[s.index()]); });
  const Shares z = reveal(r.outputs, cfg);
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(z[i], a[i] & b[i]);
  EXPECT_EQ(r.meters[0].bits, 2U * a.size());
}

TEST(BitArith, RandomAgreesWithPlaintext) {
  const RingConfig cfg;
  const Shares bits = random_words(1000, 1, 9), w = random_words(1000, 64, 10);
  const auto bs = share_all(bits, cfg, 1), ws = share_all(w, cfg, 2);
  auto r =
      two_party([&](Session& s) { return bit_arith_mul(s, bs[s.index()], ws[s.index()]); });
  const Shares z = reveal(r.outputs, cfg);
  for (std::size_t i = 0; i < w.size(); ++i) ASSERT_EQ(z[i], bits[i] ? w[i] : 0U);
  EXPECT_EQ(r.meters[0].bits, 1000U * 65);
  EXPECT_EQ(r.meters[0].rounds, 1U);
}

TEST(RunTwoParty, MismatchedRoundCountsAreProtocolErrors) {
  const RingConfig cfg;
  const Shares xs = {1};
  auto body = [&](Session& s) {
    open_values(s, xs, cfg.ell);
    if (s.index() == 0) open_values(s, xs, cfg.ell);
    return 0;
  };
  try {
    two_party(body);
    FAIL() << "expected a protocol error";
  } catch (const ProtocolError& e) {
    EXPECT_NE(std::string(e.what()).find("round"), std::string::npos) << e.what();
  }
}

TEST(RunTwoParty, UnreadFramesAreProtocolErrors) {
  const RingConfig cfg;
  auto body = [&](Session& s) {
    if (s.index() == 0) {
      BitWriter w;
      w.put(1, 8);
      s.endpoint().send(w.bytes(), 8);
      s.endpoint().flush();
    }
    return 0;
  };
  EXPECT_THROW(two_party(body), ProtocolError);
}

TEST(RunTwoParty, ExceptionsPropagate) {
  auto body = [](Session& s) -> int {
    if (s.index() == 1) throw UsageError("boom");
    return 0;
  };
  EXPECT_THROW(two_party(body), UsageError);
}

TEST(RunTwoParty, TranscriptsAreDeterministic) {
  const RingConfig cfg;
  const Shares x = random_words(50, 64, 11), y = random_words(50, 64, 12);
  const auto xs = share_all(x, cfg, 1), ys = share_all(y, cfg, 2);
  auto body = [&](Session& s) {
    s.endpoint().record_transcript(true);
    mul(s, xs[s.index()], ys[s.index()]);
    return s.endpoint().transcript();
  };
  const auto a = two_party(body, cfg, 5);
  const auto b = two_party(body, cfg, 5);
  const auto c = two_party(body, cfg, 6);
  EXPECT_EQ(a.outputs, b.outputs);
  EXPECT_NE(a.outputs, c.outputs);
}

}  // namespace
}  // namespace fssboost
