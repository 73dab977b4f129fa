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

#include "fssboost/aggregate.hpp"

#include <string>

namespace fssboost {

std::array<AggKey, 2> agg_offline(std::size_t n, Dealer& dealer) { return dealer.aggregation(n); }

MaskedPairShare agg_mask(int party, Word s, Word g, const AggKeyShare& key,
                         const RingConfig& cfg) {
  MaskedPairShare out;
  out.s_hat = (s + key.rs) & 1U;
  Word gp = g + key.rg;
  if (party == 1) gp += cfg.one();
  out.g_hat = gp & cfg.compressed_mask();
  return out;
}

Word agg_combine(int party, Word s_hat, Word g_hat, const AggKeyShare& key,
                 const RingConfig& cfg) {
  const int width = cfg.ell_c();
  const Word no_wrap = 1 - static_cast<Word>(msb(g_hat, width));
  const Word scale = Word{1} << width;
  const Word c = cfg.sub(1, 2 * s_hat);  // 1 - 2 s_hat
  Word inner = cfg.sub(cfg.mul(g_hat, key.rs), key.u);
  if (no_wrap) inner = cfg.add(inner, cfg.mul(key.m, scale));
  Word z = cfg.mul(c, cfg.sub(inner, cfg.mul(key.rs, cfg.one())));
  if (s_hat) {
    z = cfg.sub(z, key.rg);
    if (no_wrap) z = cfg.add(z, cfg.mul(key.v, scale));
  }
  if (party == 1 && s_hat) z = cfg.add(z, cfg.sub(g_hat, cfg.one()));
  return z;
}

PendingAgg agg_prepare(Session& s, Round& r, std::span<const AggRequest> requests) {
  const auto& cfg = s.ring();
  PendingAgg p;
  std::size_t total = 0;
  for (const auto& req : requests) {
    if (req.s.size() != req.g.size()) {
      throw UsageError("aggregate: indicator and gradient vectors differ in length");
    }
    total += req.s.size();
  }
  Shares s_hat, g_hat;
  s_hat.reserve(total);
  g_hat.reserve(total);
  for (const auto& req : requests) {
    p.keys.push_back(s.dealer().aggregation(req.s.size()));
    p.sizes.push_back(req.s.size());
    const auto key = p.keys.back().peek();
    for (std::size_t i = 0; i < req.s.size(); ++i) {
      const auto m = agg_mask(s.index(), req.s[i], req.g[i], key[i], cfg);
      s_hat.push_back(m.s_hat);
      g_hat.push_back(m.g_hat);
    }
  }
  p.s_slot = r.open(std::move(s_hat), 1);
  p.g_slot = r.open(std::move(g_hat), cfg.ell_c());
  return p;
}

Shares agg_finish(Session& s, const Round& r, PendingAgg& p) {
  const auto& cfg = s.ring();
  const auto& s_hat = r.opened(p.s_slot);
  const auto& g_hat = r.opened(p.g_slot);
  Shares out(p.sizes.size());
  std::size_t at = 0;
  for (std::size_t q = 0; q < p.sizes.size(); ++q) {
    const auto key = p.keys[q].take(p.sizes[q], "aggregate");
    Word acc = 0;
    for (std::size_t i = 0; i < p.sizes[q]; ++i, ++at) {
      acc += agg_combine(s.index(), s_hat[at], g_hat[at], key[i], cfg);
    }
    out[q] = cfg.reduce(acc);
  }
  return out;
}

Shares agg_batch(Session& s, std::span<const AggRequest> requests) {
  Round r(s);
  auto p = agg_prepare(s, r, requests);
  r.run();
  return agg_finish(s, r, p);
}

Word agg_online(Session& s, std::span<const Word> bits, std::span<const Word> g) {
  const AggRequest req{bits, g};
  return agg_batch(s, std::span<const AggRequest>(&req, 1))[0];
}

}  // namespace fssboost
