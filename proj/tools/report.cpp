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

#include "report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fssboost/errors.hpp"

namespace fssboost::cli {

ordered_json meter_json(const Meter& m) {
  ordered_json tags = ordered_json::object();
  for (const auto& [tag, c] : m.by_tag) {
    tags[tag] = {{"rounds", c.rounds}, {"bits", c.bits}, {"bytes", c.bytes}};
  }
  return {{"rounds", m.rounds},
          {"bits", m.bits},
          {"bytes", m.bytes},
          {"header_bytes", m.header_bytes},
          {"wire_bytes", m.wire_bytes()},
          {"by_tag", tags}};
}

ordered_json config_json(const TrainConfig& cfg) {
  return {{"trees", cfg.trees},
          {"depth", cfg.depth},
          {"buckets", cfg.buckets},
          {"segments", cfg.segments},
          {"gamma", cfg.gamma},
          {"eta", cfg.eta},
          {"ring_bits", cfg.ring.ell},
          {"frac_bits", cfg.ring.ell_f},
          {"seed", cfg.seed},
          {"gain_bits", cfg.gain_bits}};
}

ordered_json dealer_json(const DealerCounters& c) {
  const std::pair<const char*, CorrelationKind> kinds[] = {
      {"triples", CorrelationKind::kTriple},         {"squares", CorrelationKind::kSquare},
      {"bit_products", CorrelationKind::kBitProduct}, {"bit_arith", CorrelationKind::kBitArith},
      {"aggregate", CorrelationKind::kAggregate},     {"lt_gates", CorrelationKind::kLtGate}};
  ordered_json out = ordered_json::object();
  for (const auto& [name, kind] : kinds) out[name] = c.items[static_cast<int>(kind)];
  return out;
}

ordered_json estimates_json(const Meter& m, const std::string& profile) {
  ordered_json out = ordered_json::object();
  for (const char* name : {"lan", "wan"}) {
    if (profile == "both" || profile == name) {
      out[name] = estimate_time(m, NetworkProfile::by_name(name));
    }
  }
  return out;
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool is_index(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Dataset permute(const Dataset& ds, const std::vector<std::size_t>& order) {
  Dataset out;
  out.label_name = ds.label_name;
  out.labels = ds.labels;
  for (std::size_t f : order) out.feature_names.push_back(ds.feature_names[f]);
  out.rows.reserve(ds.size());
  for (const auto& row : ds.rows) {
    std::vector<double> r;
    r.reserve(order.size());
    for (std::size_t f : order) r.push_back(row[f]);
    out.rows.push_back(std::move(r));
  }
  return out;
}

std::size_t column_of(const Dataset& ds, const std::string& key) {
  const auto& names = ds.feature_names;
  if (auto it = std::find(names.begin(), names.end(), key); it != names.end()) {
    return static_cast<std::size_t>(it - names.begin());
  }
  if (is_index(key) && std::stoul(key) < names.size()) return std::stoul(key);
  throw UsageError("unknown feature column '" + key + "'");
}

}  // namespace

std::pair<Dataset, VerticalPartition> apply_split(const Dataset& ds, const std::string& flag) {
  const std::size_t F = ds.features();
  if (F < 2) throw UsageError("a vertical split needs at least 2 features");
  if (flag.empty()) return {ds, VerticalPartition::even(F)};
  if (is_index(flag)) {
    const auto k = std::stoul(flag);
    if (k < 1 || k >= F) {
      throw UsageError("--split-cols point must lie in [1, " + std::to_string(F - 1) + "]");
    }
    return {ds, VerticalPartition{k, F}};
  }
  std::vector<std::size_t> order;
  std::vector<bool> taken(F, false);
  for (const auto& key : split_list(flag)) {
    const std::size_t f = column_of(ds, key);
    if (taken[f]) throw UsageError("column '" + key + "' listed twice in --split-cols");
    taken[f] = true;
    order.push_back(f);
  }
  const std::size_t k = order.size();
  if (k == 0 || k == F) throw UsageError("--split-cols must leave features for both parties");
  for (std::size_t f = 0; f < F; ++f) {
    if (!taken[f]) order.push_back(f);
  }
  return {permute(ds, order), VerticalPartition{k, F}};
}

Dataset select_columns(const Dataset& ds, const std::vector<std::string>& names) {
  std::vector<std::size_t> order;
  for (const auto& n : names) {
    const auto& have = ds.feature_names;
    auto it = std::find(have.begin(), have.end(), n);
    if (it == have.end()) throw UsageError("dataset lacks the model's feature '" + n + "'");
    order.push_back(static_cast<std::size_t>(it - have.begin()));
  }
  return permute(ds, order);
}

void write_text(const std::string& path, const std::string& text) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace fssboost::cli
