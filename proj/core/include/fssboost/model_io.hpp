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

// JSON model documents.
//
// A party document holds one half of a secure model: the splits this party
// owns (feature, bucket, threshold), -1 elsewhere, and its leaf shares as
// hex ring words. A plain document holds a combined model with leaf values.
// Both carry "schema": 1 and echo the training configuration.

#ifndef FSSBOOST_MODEL_IO_HPP_
#define FSSBOOST_MODEL_IO_HPP_

#include <string>
#include <vector>

#include "fssboost/config.hpp"
#include "fssboost/data.hpp"
#include "fssboost/tree.hpp"

namespace fssboost {

inline constexpr int kModelSchema = 1;

struct PartyModel {
  int party = 0;
  TrainConfig config;
  VerticalPartition partition;
  std::vector<std::string> feature_names;
  std::vector<DistributedTree> trees;
};

std::string write_party_model(const PartyModel& model);
// Throws ParseError on malformed documents or an unknown schema.
PartyModel read_party_model(const std::string& text);

std::string write_plain_model(const PlainModel& model, const TrainConfig& config,
                              const std::vector<std::string>& feature_names);
PlainModel read_plain_model(const std::string& text);

// Merges two party documents (one per party, same configuration).
PlainModel combine_party_models(const PartyModel& a, const PartyModel& b);

}  // namespace fssboost

#endif  // FSSBOOST_MODEL_IO_HPP_
