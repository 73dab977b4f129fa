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

#include "fssboost/data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "fssboost/errors.hpp"

namespace fssboost {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string where(const std::string& source, std::size_t line, std::size_t col) {
  return source + ":" + std::to_string(line) + ": column " + std::to_string(col + 1);
}

std::size_t resolve_label(const std::vector<std::string>& header, const std::string& label_col,
                          const std::string& source) {
  if (label_col.empty()) return header.size() - 1;
  if (auto it = std::find(header.begin(), header.end(), label_col); it != header.end()) {
    return static_cast<std::size_t>(it - header.begin());
  }
  if (std::all_of(label_col.begin(), label_col.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto idx = std::stoul(label_col);
    if (idx < header.size()) return idx;
  }
  throw ParseError(source + ": label column '" + label_col + "' not found in header");
}

// Uniform draw in [0, bound) by rejection; independent of the standard
// library's distribution implementation.
std::uint64_t draw(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = gen();
  } while (v >= limit);
  return v % bound;
}

std::vector<std::size_t> shuffled(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 gen(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(idx[i - 1], idx[draw(gen, i)]);
  }
  return idx;
}

}  // namespace

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out;
  out.feature_names = feature_names;
  out.label_name = label_name;
  out.rows.reserve(indices.size());
  out.labels.reserve(indices.size());
  for (auto i : indices) {
    out.rows.push_back(rows.at(i));
    out.labels.push_back(labels.at(i));
  }
  return out;
}

Dataset parse_csv(const std::string& text, const std::string& label_col,
                  const std::string& source) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) header = split_line(line);
  }
  if (header.size() < 2) throw ParseError(source + ": expected a header with at least two columns");
  const std::size_t label = resolve_label(header, label_col, source);

  Dataset ds;
  ds.label_name = header[label];
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != label) ds.feature_names.push_back(header[c]);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size()) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " cells, found " +
                       std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(header.size() - 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string& cell = cells[c];
      char* end = nullptr;
      const double v = cell.empty() ? 0.0 : std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(v)) {
        throw ParseError(where(source, line_no, c) + ": non-numeric cell '" + cell + "'");
      }
      if (c == label) {
        if (v != 0.0 && v != 1.0) {
          throw ParseError(where(source, line_no, c) + ": label must be 0 or 1, got '" + cell + "'");
        }
        ds.labels.push_back(static_cast<int>(v));
      } else {
        row.push_back(v);
      }
    }
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

Dataset load_csv(const std::string& path, const std::string& label_col) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), label_col, path);
}

BucketMatrix bin_features(const Dataset& ds, int buckets) {
  if (buckets < 2) throw UsageError("bucket count must be >= 2, got " + std::to_string(buckets));
  if (ds.size() == 0) throw UsageError("cannot bin an empty dataset");
  BucketMatrix m;
  m.buckets = buckets;
  for (std::size_t f = 0; f < ds.features(); ++f) {
    double lo = ds.at(0, f), hi = lo;
    for (const auto& row : ds.rows) {
      lo = std::min(lo, row[f]);
      hi = std::max(hi, row[f]);
    }
    std::vector<double> t;
    for (int u = 1; u < buckets; ++u) t.push_back(lo + u * (hi - lo) / buckets);
    m.thresholds.push_back(std::move(t));
  }
  return m;
}

std::pair<Dataset, Dataset> split_train_test(const Dataset& ds, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw UsageError("split ratio must lie in (0, 1)");
  const auto idx = shuffled(ds.size(), seed);
  const auto n_train = static_cast<std::size_t>(std::llround(ds.size() * ratio));
  const std::span<const std::size_t> all(idx);
  return {ds.subset(all.first(n_train)), ds.subset(all.subspan(n_train))};
}

VerticalPartition VerticalPartition::even(std::size_t features) {
  return {(features + 1) / 2, features};
}

std::vector<std::size_t> sample_rows(std::size_t n, std::size_t k, std::uint64_t seed) {
  auto idx = shuffled(n, seed);
  idx.resize(std::min(k, n));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace fssboost
