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

#include "fssboost/trainer.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "fssboost/aggregate.hpp"
#include "fssboost/errors.hpp"
#include "fssboost/gain.hpp"
#include "fssboost/lut.hpp"

namespace fssboost {
namespace {

std::size_t per_feature(const TrainConfig& cfg) { return static_cast<std::size_t>(cfg.buckets - 1); }

std::size_t candidate_count(const PartyData& data, const TrainConfig& cfg) {
  return data.partition.total * per_feature(cfg);
}

// This party's share of the degenerate s_test for candidate (z, u): the
// owner holds the bit, the other party holds 0.
Shares test_bits(const PartyData& data, std::size_t z, double threshold) {
  const std::size_t N = data.rows.size();
  Shares out(N, 0);
  if (!data.owns(z)) return out;
  for (std::size_t i = 0; i < N; ++i) out[i] = data.rows.at(i, z) < threshold ? 1 : 0;
  return out;
}

void check_data(const PartyData& data, const TrainConfig& cfg) {
  if (data.rows.features() != data.partition.total) {
    throw UsageError("party data has " + std::to_string(data.rows.features()) +
                     " columns, partition expects " + std::to_string(data.partition.total));
  }
  if (data.bins.thresholds.size() != data.partition.total || data.bins.buckets != cfg.buckets) {
    throw UsageError("bucket matrix does not match the configuration");
  }
}

}  // namespace

PartyData PartyData::view(int party, const Dataset& ds, const BucketMatrix& bins,
                          VerticalPartition partition) {
  if (party != 0 && party != 1) throw UsageError("party must be 0 or 1");
  if (partition.total != ds.features() || partition.split > partition.total) {
    throw UsageError("vertical partition does not match the dataset");
  }
  PartyData out;
  out.party = party;
  out.partition = partition;
  out.rows = ds;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (auto& row : out.rows.rows) {
    for (std::size_t f = 0; f < row.size(); ++f) {
      if (partition.owner(f) != party) row[f] = nan;
    }
  }
  if (party == 0) out.rows.labels.clear();
  out.bins = bins;
  for (std::size_t f = 0; f < out.bins.thresholds.size(); ++f) {
    if (partition.owner(f) != party) {
      std::fill(out.bins.thresholds[f].begin(), out.bins.thresholds[f].end(), nan);
    }
  }
  return out;
}

GradientState compute_gradients(Session& s, const PartyData& data, std::span<const Word> margin,
                                const TrainingTables& tables, int segments) {
  MeterScope tag(s, "gradients");
  const RingConfig& ring = s.ring();
  const std::size_t N = margin.size();
  if (s.is_p1() && data.rows.labels.size() != N) {
    throw UsageError("party 1 needs one label per margin");
  }
  Round r(s);
  auto gates = sigmoid_segments_prepare(s, r, margin, segments);
  r.run();
  const Shares betas = segments_finish(s, r, gates);

  GradientState out;
  out.g = lut_select(s, betas, segments, tables.sigmoid.p);
  out.h = lut_select(s, betas, segments, tables.sigmoid.h);
  out.gc = lut_select(s, betas, segments, tables.p_coarse);
  out.hc = lut_select(s, betas, segments, tables.h_coarse);
  if (s.is_p1()) {
    for (std::size_t i = 0; i < N; ++i) {
      if (data.rows.labels[i] == 0) continue;
      out.g[i] = ring.sub(out.g[i], tables.label_full);
      out.gc[i] = ring.sub(out.gc[i], tables.label_coarse);
    }
  }
  return out;
}

std::vector<Winner> secure_best_split(Session& s, const PartyData& data,
                                      const std::vector<Shares>& spaces,
                                      const GradientState& grads, const TrainConfig& cfg,
                                      const TrainingTables& tables) {
  check_data(data, cfg);
  const RingConfig& ring = s.ring();
  const std::size_t N = data.rows.size();
  const std::size_t K = spaces.size();
  const std::size_t C = candidate_count(data, cfg);
  const std::size_t U = per_feature(cfg);
  if (C == 0) throw UsageError("no split candidates: need at least one feature and two buckets");

  // Left indicators for every (node, candidate).
  Shares s_left, s_right;
  {
    MeterScope tag(s, "indicators");
    Shares a, b;
    a.reserve(K * C * N);
    b.reserve(K * C * N);
    for (std::size_t z = 0; z < data.partition.total; ++z) {
      for (std::size_t u = 0; u < U; ++u) {
        const Shares t = test_bits(data, z, data.bins.threshold(z, u));
        for (std::size_t k = 0; k < K; ++k) {
          a.insert(a.end(), spaces[k].begin(), spaces[k].end());
          b.insert(b.end(), t.begin(), t.end());
        }
      }
    }
    s_left = bit_mul(s, a, b);
    s_right.resize(s_left.size());
    for (std::size_t i = 0; i < s_left.size(); ++i) s_right[i] = ring.sub(a[i], s_left[i]);
  }
  // Layout: candidate-major, then node, then sample.
  auto block = [&](const Shares& v, std::size_t c, std::size_t k) {
    return std::span<const Word>(v).subspan((c * K + k) * N, N);
  };

  AggregateShares agg;
  {
    MeterScope tag(s, "aggregate");
    std::vector<AggRequest> req;
    req.reserve(K * (4 * C + 1));
    for (std::size_t k = 0; k < K; ++k) {
      for (std::size_t c = 0; c < C; ++c) {
        req.push_back({block(s_left, c, k), grads.gc});
        req.push_back({block(s_right, c, k), grads.gc});
        req.push_back({block(s_left, c, k), grads.hc});
        req.push_back({block(s_right, c, k), grads.hc});
      }
      req.push_back({spaces[k], grads.hc});
    }
    const Shares sums = agg_batch(s, req);
    for (std::size_t k = 0; k < K; ++k) {
      const std::size_t base = k * (4 * C + 1);
      for (std::size_t c = 0; c < C; ++c) {
        agg.GL.push_back(sums[base + 4 * c]);
        agg.GR.push_back(sums[base + 4 * c + 1]);
        agg.HL.push_back(sums[base + 4 * c + 2]);
        agg.HR.push_back(sums[base + 4 * c + 3]);
        agg.HX.push_back(sums[base + 4 * C]);
      }
    }
  }

  Shares scores;
  {
    MeterScope tag(s, "gain");
    scores = gain_online(s, agg, tables.gamma_coarse);
  }

  MeterScope tag(s, "argmax");
  std::vector<Candidates> groups(K);
  for (std::size_t k = 0; k < K; ++k) {
    auto& g = groups[k];
    g.value.assign(scores.begin() + static_cast<std::ptrdiff_t>(k * C),
                   scores.begin() + static_cast<std::ptrdiff_t>((k + 1) * C));
    for (std::size_t c = 0; c < C; ++c) {
      g.tag0.push_back(s.constant(c / U));
      g.tag1.push_back(s.constant(c % U));
    }
  }
  return argmax(s, groups);
}

std::vector<SplitRecord> open_best_split(Session& s, const PartyData& data,
                                         std::span<const Winner> winners) {
  MeterScope tag(s, "open_split");
  const RingConfig& ring = s.ring();
  const std::size_t K = winners.size();
  const int me = s.index();

  Shares z(K);
  for (std::size_t k = 0; k < K; ++k) z[k] = winners[k].tag0;
  // c = 1{z* < F0}: party 0 owns the split when c = 1.
  Shares c = lt_gate(s, z, static_cast<Word>(data.partition.split));
  for (auto& v : c) v &= 1;
  const Shares owner_is_p0 = open_values(s, c, 1);

  BitWriter out;
  for (std::size_t k = 0; k < K; ++k) {
    const int owner = owner_is_p0[k] ? 0 : 1;
    if (owner == me) continue;
    out.put(winners[k].tag0, ring.ell);
    out.put(winners[k].tag1, ring.ell);
  }
  const auto frame = s.exchange(out);
  BitReader in(frame);

  std::vector<SplitRecord> splits(K);
  for (std::size_t k = 0; k < K; ++k) {
    const int owner = owner_is_p0[k] ? 0 : 1;
    if (owner != me) continue;
    const Word zf = ring.add(winners[k].tag0, in.get(ring.ell));
    const Word uf = ring.add(winners[k].tag1, in.get(ring.ell));
    const std::int64_t fz = ring.to_signed(zf);
    const std::int64_t fu = ring.to_signed(uf);
    if (fz < static_cast<std::int64_t>(data.partition.begin(me)) ||
        fz >= static_cast<std::int64_t>(data.partition.end(me)) || fu < 0 ||
        fu >= static_cast<std::int64_t>(data.bins.buckets - 1)) {
      throw ProtocolError("opened split (" + std::to_string(fz) + ", " + std::to_string(fu) +
                          ") is outside this party's candidates");
    }
    splits[k].feature = static_cast<int>(fz);
    splits[k].bucket = static_cast<int>(fu);
    splits[k].threshold = data.bins.threshold(static_cast<std::size_t>(fz),
                                              static_cast<std::size_t>(fu));
  }
  return splits;
}

std::vector<Shares> update_sample_spaces(Session& s, const PartyData& data,
                                         const std::vector<Shares>& spaces,
                                         std::span<const SplitRecord> splits) {
  MeterScope tag(s, "update_spaces");
  const RingConfig& ring = s.ring();
  if (splits.size() != spaces.size()) throw UsageError("one split per node is required");
  const std::size_t N = data.rows.size();
  Shares a, b;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    a.insert(a.end(), spaces[k].begin(), spaces[k].end());
    if (splits[k].owned()) {
      const Shares t = test_bits(data, static_cast<std::size_t>(splits[k].feature),
                                 splits[k].threshold);
      b.insert(b.end(), t.begin(), t.end());
    } else {
      b.insert(b.end(), N, Word{0});
    }
  }
  const Shares left = bit_mul(s, a, b);
  std::vector<Shares> out;
  out.reserve(2 * spaces.size());
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    Shares l(left.begin() + static_cast<std::ptrdiff_t>(k * N),
             left.begin() + static_cast<std::ptrdiff_t>((k + 1) * N));
    Shares r(N);
    for (std::size_t i = 0; i < N; ++i) r[i] = ring.sub(spaces[k][i], l[i]);
    out.push_back(std::move(l));
    out.push_back(std::move(r));
  }
  return out;
}

DistributedTree secure_build_tree(Session& s, const PartyData& data, const GradientState& grads,
                                  const TrainConfig& cfg, const TrainingTables& tables) {
  const std::size_t N = data.rows.size();
  DistributedTree tree;
  tree.depth = cfg.depth;
  tree.nodes.resize(internal_count(cfg.depth));

  std::vector<Shares> spaces(1, Shares(N, s.constant(1)));
  for (int d = 0; d < cfg.depth; ++d) {
    const auto winners = secure_best_split(s, data, spaces, grads, cfg, tables);
    const auto splits = open_best_split(s, data, winners);
    for (std::size_t k = 0; k < splits.size(); ++k) tree.nodes[internal_count(d) + k] = splits[k];
    spaces = update_sample_spaces(s, data, spaces, splits);
  }

  Shares G, H;
  {
    MeterScope tag(s, "leaf_aggregate");
    std::vector<AggRequest> req;
    for (const auto& sp : spaces) {
      req.push_back({sp, grads.g});
      req.push_back({sp, grads.h});
    }
    const Shares sums = agg_batch(s, req);
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      G.push_back(sums[2 * k]);
      H.push_back(sums[2 * k + 1]);
    }
  }
  MeterScope tag(s, "leaf_weight");
  tree.leaves = leafweight_online(s, G, H, tables.gamma_full, tables.leaf);
  return tree;
}

Shares secure_predict(Session& s, std::span<const DistributedTree> trees, const PartyData& data) {
  MeterScope tag(s, "predict");
  const std::size_t N = data.rows.size();
  Shares mine, zeros, weights;
  for (const auto& tree : trees) {
    const std::size_t L = leaf_count(tree.depth);
    if (tree.leaves.size() != L) throw UsageError("tree has the wrong number of leaves");
    for (std::size_t i = 0; i < N; ++i) {
      const auto path = tree.path(data.rows.rows[i]);
      mine.insert(mine.end(), path.begin(), path.end());
      weights.insert(weights.end(), tree.leaves.begin(), tree.leaves.end());
    }
  }
  zeros.assign(mine.size(), 0);
  const bool p0 = s.index() == 0;
  const Shares reach = bit_mul(s, p0 ? mine : zeros, p0 ? zeros : mine);
  const Shares parts = bit_arith_mul(s, reach, weights);

  const RingConfig& ring = s.ring();
  Shares margin(N, 0);
  std::size_t at = 0;
  for (const auto& tree : trees) {
    const std::size_t L = leaf_count(tree.depth);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < L; ++k) margin[i] = ring.add(margin[i], parts[at++]);
    }
  }
  return margin;
}

PartyOutcome train_party(Session& s, const PartyData& train, const PartyData* test,
                         const TrainConfig& cfg, int gain_bits) {
  check_data(train, cfg);
  const TrainingTables tables = make_tables(cfg, gain_bits);
  const RingConfig& ring = s.ring();
  PartyOutcome out;
  Shares margin(train.rows.size(), 0);
  for (int t = 0; t < cfg.trees; ++t) {
    const Meter before = s.endpoint().meter();
    const auto start = std::chrono::steady_clock::now();

    const GradientState grads = compute_gradients(s, train, margin, tables, cfg.segments);
    DistributedTree tree = secure_build_tree(s, train, grads, cfg, tables);
    const Shares delta = secure_predict(s, std::span<const DistributedTree>(&tree, 1), train);
    for (std::size_t i = 0; i < margin.size(); ++i) margin[i] = ring.add(margin[i], delta[i]);

    TreeStats st;
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    st.meter = s.endpoint().meter().since(before);
    out.stats.push_back(std::move(st));
    out.trees.push_back(std::move(tree));
    out.margins_after_tree.push_back(margin);
  }
  if (test != nullptr) out.test_margin = secure_predict(s, out.trees, *test);
  out.dealer = s.dealer().counters();
  return out;
}

CorrelationBudget CorrelationBudget::per_tree(std::size_t n_samples, std::size_t features,
                                              const TrainConfig& cfg) {
  const std::uint64_t N = n_samples;
  const std::uint64_t n = static_cast<std::uint64_t>(cfg.segments);
  const std::uint64_t C = features * static_cast<std::uint64_t>(cfg.buckets - 1);
  const std::uint64_t I = internal_count(cfg.depth);
  const std::uint64_t L = leaf_count(cfg.depth);
  CorrelationBudget b;
  // sigmoid, gain sign, tournament, ownership bit, leaf table.
  b.lt_gates = N * n + I * C + I * (C - 1) + I + L * n;
  b.agg_elements = I * (4 * C + 1) * N + L * 2 * N;
  // 2 weighted products and the signed product per candidate, 3 selects per match.
  b.triples = I * 3 * C + I * 3 * (C - 1);
  b.squares = I * 2 * C;
  // Candidate indicators, child spaces, margin update.
  b.bit_products = I * C * N + I * N + L * N;
  b.bit_arith = L * N;
  return b;
}

CorrelationBudget CorrelationBudget::prediction(std::size_t n_samples, const TrainConfig& cfg) {
  CorrelationBudget b;
  const std::uint64_t per = n_samples * leaf_count(cfg.depth) * static_cast<std::uint64_t>(cfg.trees);
  b.bit_products = per;
  b.bit_arith = per;
  return b;
}

CorrelationBudget& CorrelationBudget::operator+=(const CorrelationBudget& o) {
  lt_gates += o.lt_gates;
  agg_elements += o.agg_elements;
  triples += o.triples;
  squares += o.squares;
  bit_products += o.bit_products;
  bit_arith += o.bit_arith;
  return *this;
}

PlainModel combine_trees(const std::vector<DistributedTree>& p0,
                         const std::vector<DistributedTree>& p1, const RingConfig& ring) {
  if (p0.size() != p1.size()) throw UsageError("the two halves hold different tree counts");
  PlainModel model;
  model.ring = ring;
  for (std::size_t t = 0; t < p0.size(); ++t) {
    const auto& a = p0[t];
    const auto& b = p1[t];
    if (a.depth != b.depth || a.nodes.size() != b.nodes.size() ||
        a.leaves.size() != b.leaves.size()) {
      throw UsageError("tree " + std::to_string(t) + ": halves differ in shape");
    }
    PlainTree tree;
    tree.depth = a.depth;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
      if (a.nodes[i].owned() == b.nodes[i].owned()) {
        throw UsageError("tree " + std::to_string(t) + ", node " + std::to_string(i) +
                         ": exactly one half must own the split");
      }
      tree.nodes.push_back(a.nodes[i].owned() ? a.nodes[i] : b.nodes[i]);
    }
    for (std::size_t k = 0; k < a.leaves.size(); ++k) {
      const Word w = ring.add(a.leaves[k], b.leaves[k]);
      tree.leaf_fixed.push_back(w);
      tree.leaf.push_back(decode(w, ring));
    }
    model.trees.push_back(std::move(tree));
  }
  return model;
}

SecureRun train_model(const Dataset& train, const BucketMatrix& bins, VerticalPartition partition,
                      const TrainConfig& cfg, const Dataset* test) {
  cfg.validate();
  SecureRun run;
  run.gain_bits = cfg.resolve_gain_bits(train.size());
  const std::array<PartyData, 2> views = {PartyData::view(0, train, bins, partition),
                                          PartyData::view(1, train, bins, partition)};
  std::array<PartyData, 2> test_views;
  if (test != nullptr) {
    test_views = {PartyData::view(0, *test, bins, partition),
                  PartyData::view(1, *test, bins, partition)};
  }
  const int k = run.gain_bits;
  auto result = run_two_party(
      [&](Session& s) {
        const int b = s.index();
        return train_party(s, views[b], test != nullptr ? &test_views[b] : nullptr, cfg, k);
      },
      cfg.session_seed(), cfg.ring, cfg.dcf_mode);
  run.parties = std::move(result.outputs);
  run.meters = result.meters;
  run.model = combine_trees(run.parties[0].trees, run.parties[1].trees, cfg.ring);
  if (test != nullptr) {
    for (std::size_t i = 0; i < test->size(); ++i) {
      run.test_margins.push_back(decode(
          cfg.ring.add(run.parties[0].test_margin[i], run.parties[1].test_margin[i]), cfg.ring));
    }
  }
  return run;
}

}  // namespace fssboost
