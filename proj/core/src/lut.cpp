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

#include "fssboost/lut.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fssboost/errors.hpp"

namespace fssboost {
namespace {

__extension__ typedef __int128 Wide;

void check_n(int n) {
  if (n < 1) throw UsageError("segment count must be >= 1, got " + std::to_string(n));
}

// n * w_i as an exact integer.
std::int64_t scaled_point(int i, int n) { return 10 * static_cast<std::int64_t>(i) - 5 * n; }

int clamp_segment(double t, int n) {
  const double j = std::floor((t + 5.0) * n / 10.0);
  if (!(j >= 0)) return 0;
  if (j >= n) return n;
  return static_cast<int>(j);
}

}  // namespace

double segment_point(int i, int n) { return -5.0 + 10.0 * i / n; }

SigmoidTable SigmoidTable::build(int n, const RingConfig& cfg) {
  check_n(n);
  SigmoidTable t;
  t.n = n;
  const Word one = cfg.one();
  for (int i = 0; i <= n; ++i) {
    const Word p = encode(sigmoid(segment_point(i, n)), cfg).value;
    t.p.push_back(p);
    t.h.push_back(static_cast<Word>((static_cast<Wide>(p) * (one - p)) >> cfg.ell_f));
  }
  return t;
}

std::vector<Word> SigmoidTable::coarse(std::span<const Word> entries, int shift) {
  std::vector<Word> out;
  out.reserve(entries.size());
  for (Word e : entries) out.push_back(e >> shift);
  return out;
}

LeafWeightTable LeafWeightTable::build(int n, double eta, const RingConfig& cfg) {
  check_n(n);
  LeafWeightTable t;
  t.n = n;
  for (int i = 0; i <= n; ++i) t.w.push_back(encode(eta * segment_point(i, n), cfg).value);
  return t;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

int sigmoid_segment_plain(double x, int n) { return clamp_segment(x, n); }

double sigmoid_plain(double x, int n) {
  check_n(n);
  return sigmoid(segment_point(sigmoid_segment_plain(x, n), n));
}

int leafweight_segment_plain(double G, double H, double gamma, int n) {
  return clamp_segment(-G / (H + gamma), n);
}

double leafweight_plain(double G, double H, double gamma, int n) {
  check_n(n);
  return segment_point(leafweight_segment_plain(G, H, gamma, n), n);
}

int sigmoid_segment_fixed(Word x, int n, const RingConfig& cfg) {
  const Wide nx = static_cast<Wide>(n) * cfg.to_signed(x);
  int j = 0;
  for (int i = 1; i <= n; ++i) {
    if (nx >= static_cast<Wide>(scaled_point(i, n)) * static_cast<Wide>(cfg.one())) ++j;
  }
  return j;
}

Word sigmoid_fixed(Word x, const SigmoidTable& table, const RingConfig& cfg) {
  return table.p[sigmoid_segment_fixed(x, table.n, cfg)];
}

int leafweight_segment_fixed(Word G, Word H, Word gamma, int n, const RingConfig& cfg) {
  const Wide g = cfg.to_signed(G);
  const Wide hg = static_cast<Wide>(cfg.to_signed(H)) + cfg.to_signed(gamma);
  int j = 0;
  for (int i = 1; i <= n; ++i) {
    if (-n * g - scaled_point(i, n) * hg >= 0) ++j;
  }
  return j;
}

Word leafweight_fixed(Word G, Word H, Word gamma, const LeafWeightTable& table,
                      const RingConfig& cfg) {
  return table.w[leafweight_segment_fixed(G, H, gamma, table.n, cfg)];
}

Shares lut_select(const Session& s, std::span<const Word> betas, int n,
                  std::span<const Word> table) {
  const auto& cfg = s.ring();
  if (table.size() != static_cast<std::size_t>(n) + 1) {
    throw UsageError("lookup table must have n + 1 entries");
  }
  const std::size_t count = betas.size() / n;
  Shares out(count);
  for (std::size_t e = 0; e < count; ++e) {
    Word acc = s.constant(table[0]);
    for (int i = 1; i <= n; ++i) {
      acc += betas[e * n + (i - 1)] * (table[i] - table[i - 1]);
    }
    out[e] = cfg.reduce(acc);
  }
  return out;
}

PendingLt sigmoid_segments_prepare(Session& s, Round& r, std::span<const Word> x, int n) {
  check_n(n);
  const auto& cfg = s.ring();
  Shares y, omega;
  y.reserve(x.size() * n);
  omega.reserve(x.size() * n);
  for (Word xe : x) {
    const Word nx = cfg.mul(static_cast<Word>(n), xe);
    for (int i = 1; i <= n; ++i) {
      y.push_back(nx);
      omega.push_back(cfg.mul(cfg.from_signed(scaled_point(i, n)), cfg.one()));
    }
  }
  return lt_prepare(s, r, y, omega);
}

PendingLt leaf_segments_prepare(Session& s, Round& r, std::span<const Word> G,
                                std::span<const Word> H, Word gamma, int n) {
  check_n(n);
  if (G.size() != H.size()) throw UsageError("leaf weight: G and H differ in length");
  const auto& cfg = s.ring();
  Shares y;
  y.reserve(G.size() * n);
  for (std::size_t e = 0; e < G.size(); ++e) {
    const Word hg = cfg.add(H[e], s.constant(gamma));
    const Word ng = cfg.neg(cfg.mul(static_cast<Word>(n), G[e]));
    for (int i = 1; i <= n; ++i) {
      y.push_back(cfg.sub(ng, cfg.mul(cfg.from_signed(scaled_point(i, n)), hg)));
    }
  }
  return lt_prepare(s, r, y, Word{0});
}

Shares segments_finish(Session& s, const Round& r, PendingLt& p) {
  auto betas = lt_finish(s, r, p);
  complement_bits(s, betas);
  return betas;
}

Shares sigmoid_online(Session& s, std::span<const Word> x, const SigmoidTable& table) {
  Round r(s);
  auto p = sigmoid_segments_prepare(s, r, x, table.n);
  r.run();
  const auto betas = segments_finish(s, r, p);
  return lut_select(s, betas, table.n, table.p);
}

Shares leafweight_online(Session& s, std::span<const Word> G, std::span<const Word> H,
                         Word gamma, const LeafWeightTable& table) {
  Round r(s);
  auto p = leaf_segments_prepare(s, r, G, H, gamma, table.n);
  r.run();
  const auto betas = segments_finish(s, r, p);
  return lut_select(s, betas, table.n, table.w);
}

}  // namespace fssboost
