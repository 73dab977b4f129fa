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

#include "fssboost/model_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "fssboost/errors.hpp"
#include "fssboost/trainer.hpp"
#include "json.hpp"

namespace fssboost {
namespace {

using nlohmann::json;

std::string hex(Word w) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(w));
  return buf;
}

Word unhex(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used, 16);
  } catch (const std::exception&) {
    throw ParseError("model: bad ring word '" + s + "'");
  }
  if (used != s.size()) throw ParseError("model: bad ring word '" + s + "'");
  return static_cast<Word>(v);
}

json config_json(const TrainConfig& c) {
  return {{"trees", c.trees},     {"depth", c.depth},       {"buckets", c.buckets},
          {"segments", c.segments}, {"gamma", c.gamma},     {"eta", c.eta},
          {"ring_bits", c.ring.ell}, {"frac_bits", c.ring.ell_f},
          {"seed", c.seed},         {"gain_bits", c.gain_bits},
          {"dcf", c.dcf_mode == DcfMode::kTree ? "tree" : "ideal"}};
}

TrainConfig config_from(const json& j) {
  TrainConfig c;
  c.trees = j.at("trees").get<int>();
  c.depth = j.at("depth").get<int>();
  c.buckets = j.at("buckets").get<int>();
  c.segments = j.at("segments").get<int>();
  c.gamma = j.at("gamma").get<double>();
  c.eta = j.at("eta").get<double>();
  c.ring.ell = j.at("ring_bits").get<int>();
  c.ring.ell_f = j.at("frac_bits").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.gain_bits = j.at("gain_bits").get<int>();
  const auto dcf = j.at("dcf").get<std::string>();
  if (dcf != "tree" && dcf != "ideal") throw ParseError("model: unknown dcf mode '" + dcf + "'");
  c.dcf_mode = dcf == "tree" ? DcfMode::kTree : DcfMode::kIdeal;
  return c;
}

json split_json(const SplitRecord& s) {
  json j = {{"feature", s.feature}, {"bucket", s.bucket}};
  j["threshold"] = s.owned() ? json(s.threshold) : json(nullptr);
  return j;
}

SplitRecord split_from(const json& j) {
  SplitRecord s;
  s.feature = j.at("feature").get<int>();
  s.bucket = j.at("bucket").get<int>();
  const auto& t = j.at("threshold");
  s.threshold = t.is_null() ? std::numeric_limits<double>::quiet_NaN() : t.get<double>();
  if (s.owned() && t.is_null()) throw ParseError("model: owned split without a threshold");
  return s;
}

json parse_doc(const std::string& text, const char* kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", -1) != kModelSchema) {
    throw ParseError("model: expected schema " + std::to_string(kModelSchema));
  }
  if (j.value("kind", "") != kind) {
    throw ParseError(std::string("model: expected a '") + kind + "' document");
  }
  return j;
}

void check_shape(int depth, std::size_t nodes, std::size_t leaves) {
  if (depth < 0 || depth > 16 || nodes != internal_count(depth) || leaves != leaf_count(depth)) {
    throw ParseError("model: tree shape does not match its depth");
  }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
}

}  // namespace

std::string write_party_model(const PartyModel& m) {
  json trees = json::array();
  for (const auto& t : m.trees) {
    json nodes = json::array();
    for (const auto& s : t.nodes) nodes.push_back(split_json(s));
    json leaves = json::array();
    for (Word w : t.leaves) leaves.push_back(hex(w));
    trees.push_back({{"depth", t.depth}, {"nodes", nodes}, {"leaf_shares", leaves}});
  }
  const json doc = {{"schema", kModelSchema},
                    {"kind", "party"},
                    {"party", m.party},
                    {"config", config_json(m.config)},
                    {"partition", {{"split", m.partition.split}, {"total", m.partition.total}}},
                    {"feature_names", m.feature_names},
                    {"trees", trees}};
  return doc.dump(2);
}

PartyModel read_party_model(const std::string& text) {
  const json j = parse_doc(text, "party");
  return guarded([&] {
    PartyModel m;
    m.party = j.at("party").get<int>();
    if (m.party != 0 && m.party != 1) throw ParseError("model: party must be 0 or 1");
    m.config = config_from(j.at("config"));
    m.partition.split = j.at("partition").at("split").get<std::size_t>();
    m.partition.total = j.at("partition").at("total").get<std::size_t>();
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    for (const auto& jt : j.at("trees")) {
      DistributedTree t;
      t.depth = jt.at("depth").get<int>();
      for (const auto& n : jt.at("nodes")) t.nodes.push_back(split_from(n));
      for (const auto& w : jt.at("leaf_shares")) t.leaves.push_back(unhex(w.get<std::string>()));
      check_shape(t.depth, t.nodes.size(), t.leaves.size());
      m.trees.push_back(std::move(t));
    }
    return m;
  });
}

std::string write_plain_model(const PlainModel& model, const TrainConfig& config,
                              const std::vector<std::string>& feature_names) {
  json trees = json::array();
  for (const auto& t : model.trees) {
    json nodes = json::array();
    for (const auto& s : t.nodes) nodes.push_back(split_json(s));
    json jt = {{"depth", t.depth}, {"nodes", nodes}, {"leaves", t.leaf}};
    if (!t.leaf_fixed.empty()) {
      json fixed = json::array();
      for (Word w : t.leaf_fixed) fixed.push_back(hex(w));
      jt["leaf_words"] = fixed;
    }
    trees.push_back(std::move(jt));
  }
  const json doc = {{"schema", kModelSchema},  {"kind", "plain"},
                    {"config", config_json(config)}, {"feature_names", feature_names},
                    {"trees", trees}};
  return doc.dump(2);
}

PlainModel read_plain_model(const std::string& text) {
  const json j = parse_doc(text, "plain");
  return guarded([&] {
    PlainModel m;
    m.ring = config_from(j.at("config")).ring;
    for (const auto& jt : j.at("trees")) {
      PlainTree t;
      t.depth = jt.at("depth").get<int>();
      for (const auto& n : jt.at("nodes")) t.nodes.push_back(split_from(n));
      t.leaf = jt.at("leaves").get<std::vector<double>>();
      if (jt.contains("leaf_words")) {
        for (const auto& w : jt.at("leaf_words")) t.leaf_fixed.push_back(unhex(w.get<std::string>()));
        if (t.leaf_fixed.size() != t.leaf.size()) throw ParseError("model: leaf arrays differ");
      }
      check_shape(t.depth, t.nodes.size(), t.leaf.size());
      for (const auto& s : t.nodes) {
        if (!s.owned()) throw ParseError("model: plain tree with an unresolved split");
      }
      m.trees.push_back(std::move(t));
    }
    return m;
  });
}

PlainModel combine_party_models(const PartyModel& a, const PartyModel& b) {
  if (a.party == b.party) throw UsageError("combine needs one document from each party");
  const PartyModel& p0 = a.party == 0 ? a : b;
  const PartyModel& p1 = a.party == 0 ? b : a;
  if (!(p0.config.ring == p1.config.ring) || p0.config.depth != p1.config.depth ||
      p0.partition.split != p1.partition.split || p0.partition.total != p1.partition.total) {
    throw UsageError("party documents come from different configurations");
  }
  return combine_trees(p0.trees, p1.trees, p0.config.ring);
}

}  // namespace fssboost
