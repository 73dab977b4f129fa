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
#include "fssboost/reference.hpp"
#include "test_util.hpp"

namespace fssboost {
namespace {

using testing::kSmallRing;

Dataset hand_dataset() {
  Dataset ds;
  ds.feature_names = {"a", "b"};
  ds.label_name = "y";
  ds.rows = {{1, 1}, {2, 4}, {3, 2}, {4, 3}};
  ds.labels = {0, 0, 1, 1};
  return ds;
}

TEST(Brute, Dot) {
  const RingConfig cfg;
  EXPECT_EQ(brute::dot(std::vector<Word>{1, 0}, std::vector<Word>{17, 23}, cfg), 17U);
}

TEST(Brute, SignedLessTable) {
  int count = 0;
  for (Word x = 0; x < 256; ++x) {
    for (Word y = 0; y < 256; ++y) {
      const std::int64_t sx = x < 128 ? std::int64_t(x) : std::int64_t(x) - 256;
      const std::int64_t sy = y < 128 ? std::int64_t(y) : std::int64_t(y) - 256;
      count += brute::signed_less(x, y, kSmallRing) == (sx < sy);
    }
  }
  EXPECT_EQ(count, 65536);
}

TEST(Brute, CompressedMulTable) {
  for (int s = 0; s < 2; ++s) {
    for (std::int64_t g = -8; g < 8; ++g) {
      EXPECT_EQ(brute::compressed_mul(s, g, kSmallRing), s ? kSmallRing.from_signed(g) : 0U);
    }
  }
}

TEST(Tournament, TieRuleAndOddElement) {
  const RingConfig cfg;
  EXPECT_EQ(tournament_argmax(std::vector<double>{4, 4, 4, 4}), 0U);
  EXPECT_EQ(tournament_argmax(std::vector<double>{3, 9, 2}), 1U);
  EXPECT_EQ(tournament_argmax(std::vector<double>{1, 2, 7}), 2U);
  EXPECT_EQ(tournament_argmax(std::vector<Word>{5, cfg.neg(2), 5, 6}, cfg), 3U);
  EXPECT_THROW(tournament_argmax(std::vector<double>{}), UsageError);
}

TEST(PlainTrain, HandComputedSplit) {
  const Dataset ds = hand_dataset();
  TrainConfig cfg;
  cfg.trees = 1;
  cfg.depth = 1;
  cfg.buckets = 2;
  const auto bins = bin_features(ds, 2);
  // p = 1/2 everywhere, g = (1/2, 1/2, -1/2, -1/2), h = 1/4. Feature a at 2.5
  // gives 1/2 (1/1.5 + 1/1.5) = 2/3; feature b at 2.5 puts one of each label
  // on both sides and gains nothing.
  const auto exact = plain_train(ds, bins, cfg, OracleMode::kExact);
  ASSERT_EQ(exact.model.trees.size(), 1U);
  const auto& t = exact.model.trees[0];
  EXPECT_EQ(t.nodes[0].feature, 0);
  EXPECT_EQ(t.nodes[0].bucket, 0);
  EXPECT_EQ(t.nodes[0].threshold, 2.5);
  EXPECT_NEAR(t.leaf[0], -2.0 / 3.0, 1e-12);  // -G / (H + 1) = -1 / 1.5
  EXPECT_NEAR(t.leaf[1], 2.0 / 3.0, 1e-12);

  // The division-free score flips sign when 2 H_L >= H_X. Feature a splits
  // H evenly, so its score is negative and feature b (score 0) wins.
  const auto mirror = plain_train(ds, bins, cfg, OracleMode::kMirror);
  EXPECT_EQ(mirror.model.trees[0].nodes[0].feature, 1);
  EXPECT_EQ(mirror.model.trees[0].nodes[0].bucket, 0);
}

TEST(PlainTrain, ConstantPositiveLabelsPushMarginsUp) {
  Dataset ds = hand_dataset();
  ds.labels = {1, 1, 1, 1};
  TrainConfig cfg;
  cfg.trees = 1;
  cfg.depth = 2;
  cfg.buckets = 4;
  const auto bins = bin_features(ds, cfg.buckets);
  for (double m : plain_train(ds, bins, cfg, OracleMode::kExact).model.margins(ds)) {
    EXPECT_GT(m, 0.0);
  }
  // The 12-segment leaf table rounds small weights to 0 but never below it.
  for (double m : plain_train(ds, bins, cfg, OracleMode::kMirror).model.margins(ds)) {
    EXPECT_GE(m, 0.0);
  }
}

TEST(PlainTrain, DepthZeroIsOneLeaf) {
  const Dataset ds = hand_dataset();
  TrainConfig cfg;
  cfg.trees = 1;
  cfg.depth = 0;
  const auto run = plain_train(ds, bin_features(ds, cfg.buckets), cfg, OracleMode::kExact);
  const auto& t = run.model.trees[0];
  EXPECT_TRUE(t.nodes.empty());
  ASSERT_EQ(t.leaf.size(), 1U);
  EXPECT_EQ(t.leaf[0], 0.0);  // balanced labels give G = 0
}

TEST(PlainTrain, MirrorMarginsAreRingSums) {
  const Dataset ds = load_csv(testing::data_path("breast_cancer.csv"));
  const Dataset sub = ds.subset(sample_rows(ds.size(), 120, 3));
  TrainConfig cfg;
  cfg.trees = 3;
  cfg.depth = 2;
  const auto run = plain_train(sub, bin_features(sub, cfg.buckets), cfg, OracleMode::kMirror);
  ASSERT_EQ(run.margins_after_tree.size(), 3U);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    EXPECT_EQ(run.margins_after_tree.back()[i], run.model.margin_fixed(sub.rows[i]));
  }
  EXPECT_GT(accuracy(run.model.margins(sub), sub.labels), 0.9);
}

TEST(PlainTrain, RejectsMismatchedBins) {
  const Dataset ds = hand_dataset();
  BucketMatrix bins = bin_features(ds, 2);
  bins.thresholds.pop_back();
  EXPECT_THROW(plain_train(ds, bins, TrainConfig{}, OracleMode::kExact), UsageError);
}

}  // namespace
}  // namespace fssboost
