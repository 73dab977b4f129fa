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

// Tabular input: CSV loading, equal-width binning, seeded train/test split
// and the vertical feature partition between the two parties.

#ifndef FSSBOOST_DATA_HPP_
#define FSSBOOST_DATA_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fssboost {

struct Dataset {
  std::vector<std::string> feature_names;
  std::string label_name;
  std::vector<std::vector<double>> rows;  // N x F
  std::vector<int> labels;                // 0/1

  std::size_t size() const { return rows.size(); }
  std::size_t features() const { return feature_names.size(); }
  double at(std::size_t row, std::size_t feature) const { return rows[row][feature]; }

  Dataset subset(std::span<const std::size_t> indices) const;
};

// Reads a headered, comma-separated numeric table. `label_col` is a column
// name or a zero-based index; empty means the last column. Throws ParseError
// with the 1-based line and column of the offending cell.
Dataset load_csv(const std::string& path, const std::string& label_col = "");
Dataset parse_csv(const std::string& text, const std::string& label_col = "",
                  const std::string& source = "<memory>");

// Per feature, B - 1 ascending thresholds t_u = min + u (max - min) / B. A
// constant feature gets B - 1 copies of its value, so `x < t` is false for
// every sample.
struct BucketMatrix {
  int buckets = 0;
  std::vector<std::vector<double>> thresholds;

  double threshold(std::size_t feature, std::size_t u) const { return thresholds[feature][u]; }
};

BucketMatrix bin_features(const Dataset& ds, int buckets);

// Seeded Fisher-Yates shuffle then a round(N * ratio) / rest split. Not
// stratified. Portable: the shuffle uses mt19937_64 with rejection sampling.
std::pair<Dataset, Dataset> split_train_test(const Dataset& ds, double ratio, std::uint64_t seed);

// Features [0, split) belong to party 0, [split, F) and the labels to party 1.
struct VerticalPartition {
  std::size_t split = 0;
  std::size_t total = 0;

  static VerticalPartition even(std::size_t features);
  int owner(std::size_t feature) const { return feature < split ? 0 : 1; }
  std::size_t begin(int party) const { return party == 0 ? 0 : split; }
  std::size_t end(int party) const { return party == 0 ? split : total; }
};

// Rows drawn uniformly without replacement (seeded), kept in original order.
std::vector<std::size_t> sample_rows(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace fssboost

#endif  // FSSBOOST_DATA_HPP_
