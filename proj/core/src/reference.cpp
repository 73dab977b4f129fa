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

#include "fssboost/reference.hpp"

#include <cmath>

#include "fssboost/errors.hpp"
#include "fssboost/gain.hpp"
#include "fssboost/lut.hpp"

namespace fssboost {
namespace {

using Space = std::vector<char>;

template <typename T, typename Less>
std::size_t tournament(std::span<const T> values, Less right_wins) {
  if (values.empty()) throw UsageError("argmax of an empty list");
  std::vector<std::size_t> alive(values.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  while (alive.size() > 1) {
    std::vector<std::size_t> next;
    for (std::size_t j = 0; j + 1 < alive.size(); j += 2) {
      const auto a = alive[j], b = alive[j + 1];
      next.push_back(right_wins(values[a], values[b]) ? b : a);
    }
    if (alive.size() % 2 == 1) next.push_back(alive.back());
    alive = std::move(next);
  }
  return alive[0];
}

bool goes_left(const Dataset& ds, std::size_t i, int feature, double threshold) {
  return ds.at(i, feature) < threshold;
}

void split_spaces(const Dataset& ds, const Space& s, const SplitRecord& split, Space& left,
                  Space& right) {
  left.assign(s.size(), 0);
  right.assign(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i]) continue;
    (goes_left(ds, i, split.feature, split.threshold) ? left[i] : right[i]) = 1;
  }
}

template <typename Score>
PlainTree grow(const Dataset& ds, const BucketMatrix& bins, int depth, Score&& score_node) {
  PlainTree tree;
  tree.depth = depth;
  tree.nodes.resize(internal_count(depth));
  std::vector<Space> level(1, Space(ds.size(), 1));
  for (int d = 0; d < depth; ++d) {
    std::vector<Space> next;
    for (std::size_t k = 0; k < level.size(); ++k) {
      const std::size_t node = internal_count(d) + k;
      const auto [feature, bucket] = score_node(level[k]);
      SplitRecord split{feature, bucket, bins.threshold(feature, bucket)};
      tree.nodes[node] = split;
      Space left, right;
      split_spaces(ds, level[k], split, left, right);
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    level = std::move(next);
  }
  return tree;
}

// Leaves reached by each sample, from the final level of spaces.
std::vector<Space> leaf_spaces(const Dataset& ds, const PlainTree& tree) {
  std::vector<Space> out(leaf_count(tree.depth), Space(ds.size(), 0));
  for (std::size_t i = 0; i < ds.size(); ++i) out[tree.route(ds.rows[i])][i] = 1;
  return out;
}

PlainTree train_mirror_tree(const Dataset& ds, const BucketMatrix& bins, const TrainConfig& cfg,
                            const TrainingTables& tab, std::vector<Word>& margin) {
  const RingConfig& ring = cfg.ring;
  const std::size_t N = ds.size();
  const std::size_t F = ds.features();
  const std::size_t per_feature = static_cast<std::size_t>(cfg.buckets - 1);

  std::vector<Word> g(N), h(N), gc(N), hc(N);
  for (std::size_t i = 0; i < N; ++i) {
    const int j = sigmoid_segment_fixed(margin[i], cfg.segments, ring);
    const Word y = static_cast<Word>(ds.labels[i]);
    g[i] = ring.sub(tab.sigmoid.p[j], y * tab.label_full);
    h[i] = tab.sigmoid.h[j];
    gc[i] = ring.sub(tab.p_coarse[j], y * tab.label_coarse);
    hc[i] = tab.h_coarse[j];
  }

  // Per-sample routing of every candidate test, computed once per tree.
  std::vector<Space> test(F * per_feature, Space(N, 0));
  for (std::size_t z = 0; z < F; ++z) {
    for (std::size_t u = 0; u < per_feature; ++u) {
      for (std::size_t i = 0; i < N; ++i) {
        test[z * per_feature + u][i] = goes_left(ds, i, static_cast<int>(z), bins.threshold(z, u));
      }
    }
  }

  auto score_node = [&](const Space& s) {
    Word hx = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (s[i]) hx = ring.add(hx, hc[i]);
    }
    std::vector<Word> scores(test.size());
    for (std::size_t c = 0; c < test.size(); ++c) {
      FixedAggregates a;
      a.HX = hx;
      for (std::size_t i = 0; i < N; ++i) {
        if (!s[i]) continue;
        if (test[c][i]) {
          a.GL = ring.add(a.GL, gc[i]);
          a.HL = ring.add(a.HL, hc[i]);
        } else {
          a.GR = ring.add(a.GR, gc[i]);
          a.HR = ring.add(a.HR, hc[i]);
        }
      }
      scores[c] = gain_fixed(a, tab.gamma_coarse, ring);
    }
    const std::size_t best = tournament_argmax(std::span<const Word>(scores), ring);
    return std::pair<int, int>(static_cast<int>(best / per_feature),
                               static_cast<int>(best % per_feature));
  };

  PlainTree tree = grow(ds, bins, cfg.depth, score_node);
  const auto leaves = leaf_spaces(ds, tree);
  for (const auto& s : leaves) {
    Word G = 0, H = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (!s[i]) continue;
      G = ring.add(G, g[i]);
      H = ring.add(H, h[i]);
    }
    const Word w = leafweight_fixed(G, H, tab.gamma_full, tab.leaf, ring);
    tree.leaf_fixed.push_back(w);
    tree.leaf.push_back(decode(w, ring));
  }
  for (std::size_t i = 0; i < N; ++i) {
    margin[i] = ring.add(margin[i], tree.leaf_fixed[tree.route(ds.rows[i])]);
  }
  return tree;
}

PlainTree train_exact_tree(const Dataset& ds, const BucketMatrix& bins, const TrainConfig& cfg,
                           std::vector<double>& margin) {
  const std::size_t N = ds.size();
  const std::size_t F = ds.features();
  const std::size_t per_feature = static_cast<std::size_t>(cfg.buckets - 1);
  std::vector<double> g(N), h(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double p = sigmoid(margin[i]);
    g[i] = p - ds.labels[i];
    h[i] = p * (1.0 - p);
  }

  auto score_node = [&](const Space& s) {
    double GX = 0, HX = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (s[i]) {
        GX += g[i];
        HX += h[i];
      }
    }
    std::vector<double> scores(F * per_feature);
    for (std::size_t z = 0; z < F; ++z) {
      for (std::size_t u = 0; u < per_feature; ++u) {
        const double t = bins.threshold(z, u);
        double GL = 0, HL = 0;
        for (std::size_t i = 0; i < N; ++i) {
          if (s[i] && goes_left(ds, i, static_cast<int>(z), t)) {
            GL += g[i];
            HL += h[i];
          }
        }
        scores[z * per_feature + u] =
            exact_gain_plain(GL, GX - GL, GX, HL, HX - HL, HX, cfg.gamma);
      }
    }
    const std::size_t best = tournament_argmax(std::span<const double>(scores));
    return std::pair<int, int>(static_cast<int>(best / per_feature),
                               static_cast<int>(best % per_feature));
  };

  PlainTree tree = grow(ds, bins, cfg.depth, score_node);
  for (const auto& s : leaf_spaces(ds, tree)) {
    double G = 0, H = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (s[i]) {
        G += g[i];
        H += h[i];
      }
    }
    tree.leaf.push_back(-cfg.eta * G / (H + cfg.gamma));
  }
  for (std::size_t i = 0; i < N; ++i) margin[i] += tree.leaf[tree.route(ds.rows[i])];
  return tree;
}

}  // namespace

std::size_t tournament_argmax(std::span<const Word> values, const RingConfig& cfg) {
  return tournament(values, [&](Word a, Word b) { return cfg.to_signed(cfg.sub(a, b)) < 0; });
}

std::size_t tournament_argmax(std::span<const double> values) {
  return tournament(values, [](double a, double b) { return a < b; });
}

ReferenceRun plain_train(const Dataset& train, const BucketMatrix& bins, const TrainConfig& cfg,
                         OracleMode mode) {
  if (bins.thresholds.size() != train.features()) {
    throw UsageError("bucket matrix does not match the dataset's feature count");
  }
  ReferenceRun run;
  run.model.ring = cfg.ring;
  if (mode == OracleMode::kMirror) {
    run.gain_bits = cfg.resolve_gain_bits(train.size());
    const auto tables = make_tables(cfg, run.gain_bits);
    std::vector<Word> margin(train.size(), 0);
    for (int t = 0; t < cfg.trees; ++t) {
      run.model.trees.push_back(train_mirror_tree(train, bins, cfg, tables, margin));
      run.margins_after_tree.push_back(margin);
    }
  } else {
    cfg.validate();
    std::vector<double> margin(train.size(), 0.0);
    for (int t = 0; t < cfg.trees; ++t) {
      run.model.trees.push_back(train_exact_tree(train, bins, cfg, margin));
    }
  }
  return run;
}

namespace brute {

Word dot(std::span<const Word> s, std::span<const Word> g, const RingConfig& cfg) {
  Word acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) acc = cfg.add(acc, cfg.mul(s[i], g[i]));
  return acc;
}

bool signed_less(Word x, Word y, const RingConfig& cfg) { return cfg.to_signed(x) < cfg.to_signed(y); }

Word piecewise(std::span<const std::int64_t> boundaries, std::span<const Word> table,
               std::int64_t x) {
  std::size_t j = 0;
  for (auto b : boundaries) j += static_cast<std::size_t>(x >= b);
  return table[j];
}

Word compressed_mul(int s, std::int64_t g, const RingConfig& cfg) {
  return s ? cfg.from_signed(g) : Word{0};
}

}  // namespace brute
}  // namespace fssboost
