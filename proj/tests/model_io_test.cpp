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

#include <string>

#include "fssboost/errors.hpp"
#include "fssboost/model_io.hpp"
#include "fssboost/reference.hpp"
#include "fssboost/trainer.hpp"
#include "test_util.hpp"

namespace fssboost {
namespace {

struct Trained {
  Dataset data;
  TrainConfig cfg;
  SecureRun run;
  ReferenceRun mirror;
};

const Trained& trained() {
  static const Trained t = [] {
    Trained out;
    const Dataset ds = load_csv(testing::data_path("breast_cancer.csv"));
    out.data = ds.subset(sample_rows(ds.size(), 100, 8));
    out.cfg.trees = 2;
    out.cfg.depth = 2;
    const auto bins = bin_features(out.data, out.cfg.buckets);
    out.run = train_model(out.data, bins, VerticalPartition::even(9), out.cfg);
    out.cfg.gain_bits = out.run.gain_bits;
    out.mirror = plain_train(out.data, bins, out.cfg, OracleMode::kMirror);
    return out;
  }();
  return t;
}

PartyModel party_doc(int b) {
  const Trained& t = trained();
  return {b, t.cfg, VerticalPartition::even(9), t.data.feature_names, t.run.parties[b].trees};
}

TEST(PartyModelIo, RoundTrip) {
  const PartyModel m = party_doc(1);
  const std::string text = write_party_model(m);
  EXPECT_NE(text.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(text.find("\"leaf_shares\""), std::string::npos);
  const PartyModel back = read_party_model(text);
  EXPECT_EQ(back.party, 1);
  EXPECT_EQ(back.config.trees, 2);
  EXPECT_EQ(back.config.gain_bits, m.config.gain_bits);
  EXPECT_EQ(back.partition.split, 5U);
  ASSERT_EQ(back.trees.size(), m.trees.size());
  for (std::size_t t = 0; t < m.trees.size(); ++t) {
    EXPECT_EQ(back.trees[t].leaves, m.trees[t].leaves);
    ASSERT_EQ(back.trees[t].nodes.size(), m.trees[t].nodes.size());
    for (std::size_t i = 0; i < m.trees[t].nodes.size(); ++i) {
      EXPECT_EQ(back.trees[t].nodes[i], m.trees[t].nodes[i]);
    }
  }
  EXPECT_EQ(write_party_model(back), text);
}

TEST(PartyModelIo, CombinedDocumentsEqualMirror) {
  const PlainModel m = combine_party_models(read_party_model(write_party_model(party_doc(1))),
                                            read_party_model(write_party_model(party_doc(0))));
  ASSERT_TRUE(structurally_equal(m, trained().mirror.model));
  const Trained& t = trained();
  EXPECT_EQ(write_plain_model(m, t.cfg, t.data.feature_names),
            write_plain_model(t.mirror.model, t.cfg, t.data.feature_names));
}

TEST(PartyModelIo, CombineRejectsSameParty) {
  EXPECT_THROW(combine_party_models(party_doc(0), party_doc(0)), UsageError);
  PartyModel other = party_doc(1);
  other.partition.split = 4;
  EXPECT_THROW(combine_party_models(party_doc(0), other), UsageError);
}

TEST(PlainModelIo, RoundTripKeepsRingWords) {
  const Trained& t = trained();
  const std::string text = write_plain_model(t.mirror.model, t.cfg, t.data.feature_names);
  const PlainModel back = read_plain_model(text);
  ASSERT_TRUE(structurally_equal(back, t.mirror.model));
  for (const auto& row : t.data.rows) {
    EXPECT_EQ(back.margin_fixed(row), t.mirror.model.margin_fixed(row));
  }
}

TEST(PlainModelIo, RealValuedModel) {
  const Trained& t = trained();
  const auto exact = plain_train(t.data, bin_features(t.data, t.cfg.buckets), t.cfg,
                                 OracleMode::kExact);
  const PlainModel back = read_plain_model(write_plain_model(exact.model, t.cfg, {}));
  EXPECT_FALSE(back.fixed_point());
  EXPECT_EQ(back.margins(t.data), exact.model.margins(t.data));
}

TEST(ModelIo, RejectsBadDocuments) {
  const std::string good = write_party_model(party_doc(0));
  EXPECT_THROW(read_party_model("{"), ParseError);
  EXPECT_THROW(read_party_model("[]"), ParseError);
  std::string wrong_schema = good;
  wrong_schema.replace(wrong_schema.find("\"schema\": 1"), 11, "\"schema\": 2");
  EXPECT_THROW(read_party_model(wrong_schema), ParseError);
  EXPECT_THROW(read_plain_model(good), ParseError);  // wrong kind
  std::string bad_word = good;
  bad_word.replace(bad_word.find("0x"), 2, "zz");
  EXPECT_THROW(read_party_model(bad_word), ParseError);
  std::string missing = good;
  missing.replace(missing.find("\"depth\": 2,"), 11, "");
  EXPECT_THROW(read_party_model(missing), ParseError);
}

}  // namespace
}  // namespace fssboost
