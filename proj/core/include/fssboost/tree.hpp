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

// Complete binary trees of depth D in level order: internal node i has
// children 2i+1 (taken when x[feature] < threshold) and 2i+2; leaf k is node
// 2^D - 1 + k.

#ifndef FSSBOOST_TREE_HPP_
#define FSSBOOST_TREE_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "fssboost/data.hpp"
#include "fssboost/ring.hpp"

namespace fssboost {

constexpr std::size_t internal_count(int depth) { return (std::size_t{1} << depth) - 1; }
constexpr std::size_t leaf_count(int depth) { return std::size_t{1} << depth; }

// (feature, bucket) of a split; (-1, -1) where the holder does not own it.
struct SplitRecord {
  int feature = -1;
  int bucket = -1;
  double threshold = std::numeric_limits<double>::quiet_NaN();

  bool owned() const { return feature >= 0; }
  friend bool operator==(const SplitRecord& a, const SplitRecord& b) {
    return a.feature == b.feature && a.bucket == b.bucket;
  }
};

struct PlainTree {
  int depth = 0;
  std::vector<SplitRecord> nodes;
  std::vector<Word> leaf_fixed;  // ring values; empty for real-valued trees
  std::vector<double> leaf;

  std::size_t route(std::span<const double> row) const;
};

struct PlainModel {
  RingConfig ring;
  std::vector<PlainTree> trees;

  bool fixed_point() const { return !trees.empty() && !trees.front().leaf_fixed.empty(); }
  double margin(std::span<const double> row) const;
  // Exact ring sum of leaf values; fixed-point models only.
  Word margin_fixed(std::span<const double> row) const;
  std::vector<double> margins(const Dataset& ds) const;
};

// Label 1 iff margin >= 0.
double accuracy(std::span<const double> margins, std::span<const int> labels);

// Identical (feature, bucket) at every node and identical ring leaves.
bool structurally_equal(const PlainModel& a, const PlainModel& b);

// One party's half of a secure tree.
struct DistributedTree {
  int depth = 0;
  std::vector<SplitRecord> nodes;
  std::vector<Word> leaves;  // shares

  // Leaves consistent with every split this party owns; unowned nodes are
  // wildcards. One 0/1 entry per leaf.
  std::vector<Word> path(std::span<const double> row) const;
};

}  // namespace fssboost

#endif  // FSSBOOST_TREE_HPP_
