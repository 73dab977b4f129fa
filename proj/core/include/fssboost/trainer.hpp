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

// Secure two-party gradient boosting over vertically partitioned data.
//
// Party 0 holds features [0, F0), party 1 holds [F0, F) and the labels.
// Trees are grown level by level: every node of a level shares the rounds of
// each step.
//
//   gradients     1 round    sigmoid table on the margins (n gates / sample)
//   per level     1 round    left indicators s * s_test per candidate
//                 1 round    aggregates G_L, G_R, H_L, H_R per candidate, H_X
//                 3 rounds   division-free score per candidate
//                 2 rounds   per tournament level of the argmax
//                 3 rounds   ownership bit, its opening, shares to the owner
//                 1 round    child sample spaces
//   leaves        1 round    G and H per leaf
//                 1 round    leaf table
//   margins       2 rounds   path products, then weights
//
// Split candidates are numbered feature-major, bucket-minor over the global
// feature index; s_test is 1 when x[feature] < threshold (left child).

#ifndef FSSBOOST_TRAINER_HPP_
#define FSSBOOST_TRAINER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fssboost/compare.hpp"
#include "fssboost/config.hpp"
#include "fssboost/data.hpp"
#include "fssboost/mpc.hpp"
#include "fssboost/tree.hpp"

namespace fssboost {

// One party's input: its own columns (others are NaN), its thresholds, and
// the labels for party 1 only.
struct PartyData {
  int party = 0;
  VerticalPartition partition;
  Dataset rows;
  BucketMatrix bins;

  static PartyData view(int party, const Dataset& ds, const BucketMatrix& bins,
                        VerticalPartition partition);
  bool owns(std::size_t feature) const { return partition.owner(feature) == party; }
  bool has_labels() const { return !rows.labels.empty(); }
};

struct GradientState {
  Shares g, h;    // ell_f fraction bits
  Shares gc, hc;  // gain precision
};

// Sigmoid table on the margins, then g = p - y and h = p (1 - p) read from
// the same segment bits.
GradientState compute_gradients(Session& s, const PartyData& data, std::span<const Word> margin,
                                const TrainingTables& tables, int segments);

// Shared best (feature, bucket) per node of one level.
std::vector<Winner> secure_best_split(Session& s, const PartyData& data,
                                      const std::vector<Shares>& spaces,
                                      const GradientState& grads, const TrainConfig& cfg,
                                      const TrainingTables& tables);

// Opens c = 1{z* < F0} to both parties and (z*, u*) to the owner only.
// Returns this party's view: the split where it owns it, (-1, -1) elsewhere.
std::vector<SplitRecord> open_best_split(Session& s, const PartyData& data,
                                         std::span<const Winner> winners);

// Children (left, right) of every node: s_L = s * s_test, s_R = s - s_L.
std::vector<Shares> update_sample_spaces(Session& s, const PartyData& data,
                                         const std::vector<Shares>& spaces,
                                         std::span<const SplitRecord> splits);

DistributedTree secure_build_tree(Session& s, const PartyData& data, const GradientState& grads,
                                  const TrainConfig& cfg, const TrainingTables& tables);

// Shares of the summed leaf weights for every row of `data`.
Shares secure_predict(Session& s, std::span<const DistributedTree> trees, const PartyData& data);

struct TreeStats {
  double seconds = 0.0;
  Meter meter;
};

struct PartyOutcome {
  std::vector<DistributedTree> trees;
  std::vector<TreeStats> stats;
  std::vector<Shares> margins_after_tree;
  Shares test_margin;
  DealerCounters dealer;
};

PartyOutcome train_party(Session& s, const PartyData& train, const PartyData* test,
                         const TrainConfig& cfg, int gain_bits);

// Correlated randomness consumed per tree (and per prediction pass).
struct CorrelationBudget {
  std::uint64_t lt_gates = 0;
  std::uint64_t agg_elements = 0;
  std::uint64_t triples = 0;
  std::uint64_t squares = 0;
  std::uint64_t bit_products = 0;
  std::uint64_t bit_arith = 0;

  static CorrelationBudget per_tree(std::size_t n_samples, std::size_t features,
                                    const TrainConfig& cfg);
  static CorrelationBudget prediction(std::size_t n_samples, const TrainConfig& cfg);
  CorrelationBudget& operator+=(const CorrelationBudget& o);
};

struct SecureRun {
  std::array<PartyOutcome, 2> parties;
  std::array<Meter, 2> meters;
  PlainModel model;  // both halves combined with opened leaves
  int gain_bits = 0;
  std::vector<double> test_margins;
};

// Runs both parties in-process. When `test` is given the model's margins on
// it are computed securely and opened.
SecureRun train_model(const Dataset& train, const BucketMatrix& bins, VerticalPartition partition,
                      const TrainConfig& cfg, const Dataset* test = nullptr);

// Merges the two halves; leaves are opened by adding shares.
PlainModel combine_trees(const std::vector<DistributedTree>& p0,
                         const std::vector<DistributedTree>& p1, const RingConfig& ring);

}  // namespace fssboost

#endif  // FSSBOOST_TRAINER_HPP_
