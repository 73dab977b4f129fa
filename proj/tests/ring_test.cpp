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
#include "fssboost/ring.hpp"
#include "test_util.hpp"

namespace fssboost {
namespace {

using testing::kSmallRing;

TEST(Encode, ZeroAndOne) {
  const RingConfig cfg;
  EXPECT_EQ(encode(0.0, cfg).value, 0U);
  EXPECT_EQ(encode(1.0, cfg).value, 65536U);
}

TEST(Encode, NegativeOnSmallRing) { EXPECT_EQ(encode(-0.5, kSmallRing).value, 252U); }

TEST(Encode, OutOfRangeThrows) {
  EXPECT_THROW(encode(16.0, kSmallRing), RangeError);
  EXPECT_THROW(encode(-16.5, kSmallRing), RangeError);
  EXPECT_THROW(encode(std::nan(""), RingConfig{}), RangeError);
}

TEST(Decode, Examples) {
  const RingConfig cfg;
  EXPECT_EQ(decode(RingElement{0}, cfg), 0.0);
  EXPECT_EQ(decode(RingElement{65536}, cfg), 1.0);
  EXPECT_EQ(decode(RingElement{252}, kSmallRing), -0.5);
}

TEST(Decode, RoundTripsEverySmallRingValue) {
  for (Word v = 0; v < 256; ++v) {
    if (v == 128) continue;  // -16 decodes but lies outside the open encode range
    EXPECT_EQ(encode(decode(RingElement{v}, kSmallRing), kSmallRing).value, v);
  }
  EXPECT_EQ(decode(RingElement{128}, kSmallRing), -16.0);
  EXPECT_THROW(encode(-16.0, kSmallRing), RangeError);
}

// Product of two encodings truncated by ell_f against the real product.
void expect_product(double a, double b) {
  const RingConfig cfg;
  const Word p = cfg.mul(encode(a, cfg).value, encode(b, cfg).value);
  const Word t = truncate(RingElement{p}, cfg.ell_f, cfg).value;
  const std::int64_t want = cfg.to_signed(encode(a * b, cfg).value);
  EXPECT_LE(std::llabs(cfg.to_signed(t) - want), 1) << a << " * " << b;
}

TEST(Truncate, FixedPointProducts) {
  expect_product(1.0, 1.0);
  expect_product(0.5, 0.5);
  expect_product(-1.0, 2.0);
  expect_product(-3.25, -0.125);
}

TEST(Truncate, ShareWiseStaysWithinOneUlp) {
  const RingConfig cfg;
  CtrPrg rng(Block{3, 4}, Block{});
  int off = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::int64_t x = static_cast<std::int64_t>(rng.uniform(1ULL << 40)) - (1LL << 39);
    const Word r = rng.next_u64();
    const Word s0 = cfg.sub(cfg.from_signed(x), r);
    const Word t = cfg.add(truncate_share(s0, 16, 0, cfg), truncate_share(r, 16, 1, cfg));
    off += std::llabs(cfg.to_signed(t) - (x >> 16)) > 1;
  }
  // Failure probability is about |x| / 2^63 < 2^-23 per trial.
  EXPECT_EQ(off, 0);
}

TEST(Msb, Examples) {
  EXPECT_EQ(msb(16, 5), 1);
  EXPECT_EQ(msb(15, 5), 0);
  const RingConfig cfg;
  EXPECT_EQ(msb(CompressedElement{cfg.compressed_mask()}, cfg), 1);
  EXPECT_EQ(msb(RingElement{Word{1} << 63}, cfg), 1);
}

TEST(RingConfig, SignedViews) {
  EXPECT_EQ(kSmallRing.to_signed(255), -1);
  EXPECT_EQ(kSmallRing.to_signed(128), -128);
  EXPECT_EQ(kSmallRing.to_signed(127), 127);
  EXPECT_EQ(kSmallRing.from_signed(-4), 252U);
  EXPECT_EQ(kSmallRing.ell_c(), 5);
}

TEST(RingConfig, ValidateRejectsBadWidths) {
  EXPECT_THROW((RingConfig{8, 6}.validate()), SetupError);
  EXPECT_THROW((RingConfig{65, 16}.validate()), SetupError);
  EXPECT_NO_THROW((RingConfig{64, 16}.validate()));
}

}  // namespace
}  // namespace fssboost
