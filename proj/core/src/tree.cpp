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

#include "fssboost/tree.hpp"

#include "fssboost/errors.hpp"

namespace fssboost {

std::size_t PlainTree::route(std::span<const double> row) const {
  std::size_t node = 0;
  for (int d = 0; d < depth; ++d) {
    const SplitRecord& split = nodes[node];
    if (!split.owned()) throw UsageError("plaintext tree has an unresolved split");
    node = row[split.feature] < split.threshold ? 2 * node + 1 : 2 * node + 2;
  }
  return node - internal_count(depth);
}

double PlainModel::margin(std::span<const double> row) const {
  if (fixed_point()) return decode(margin_fixed(row), ring);
  double m = 0.0;
  for (const auto& t : trees) m += t.leaf[t.route(row)];
  return m;
}

Word PlainModel::margin_fixed(std::span<const double> row) const {
  Word m = 0;
  for (const auto& t : trees) m = ring.add(m, t.leaf_fixed[t.route(row)]);
  return m;
}

std::vector<double> PlainModel::margins(const Dataset& ds) const {
  std::vector<double> out;
  out.reserve(ds.size());
  for (const auto& row : ds.rows) out.push_back(margin(row));
  return out;
}

double accuracy(std::span<const double> margins, std::span<const int> labels) {
  if (margins.size() != labels.size() || margins.empty()) {
    throw UsageError("accuracy: margins and labels differ in length or are empty");
  }
  std::size_t hit = 0;
  for (std::size_t i = 0; i < margins.size(); ++i) {
    hit += static_cast<std::size_t>((margins[i] >= 0.0 ? 1 : 0) == labels[i]);
  }
  return static_cast<double>(hit) / static_cast<double>(margins.size());
}

bool structurally_equal(const PlainModel& a, const PlainModel& b) {
  if (a.trees.size() != b.trees.size()) return false;
  for (std::size_t t = 0; t < a.trees.size(); ++t) {
    const auto& x = a.trees[t];
    const auto& y = b.trees[t];
    if (x.depth != y.depth || x.nodes != y.nodes || x.leaf_fixed != y.leaf_fixed) return false;
  }
  return true;
}

std::vector<Word> DistributedTree::path(std::span<const double> row) const {
  const std::size_t first_leaf = internal_count(depth);
  std::vector<Word> out(leaf_count(depth), 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::size_t node = first_leaf + k;
    while (node > 0) {
      const std::size_t parent = (node - 1) / 2;
      const SplitRecord& split = nodes[parent];
      if (split.owned()) {
        const bool left = row[split.feature] < split.threshold;
        if (left != (node == 2 * parent + 1)) {
          out[k] = 0;
          break;
        }
      }
      node = parent;
    }
  }
  return out;
}

}  // namespace fssboost
