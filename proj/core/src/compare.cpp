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

#include "fssboost/compare.hpp"

#include <string>

namespace fssboost {

std::array<LtGateKey, 2> lt_gate_keys(Word alpha, const RingConfig& cfg, CtrPrg& rng,
                                      DcfMode mode) {
  alpha = cfg.reduce(alpha);
  auto dcf = dcf_gen(alpha, Word{1}, cfg, rng, mode);
  const Word r = rng.next_bits(cfg.ell);
  std::array<LtGateKey, 2> keys;
  keys[0].dcf = std::move(dcf[0]);
  keys[1].dcf = std::move(dcf[1]);
  keys[0].alpha = cfg.sub(alpha, r);
  keys[1].alpha = r;
  return keys;
}

Word lt_eval_local(int party, const LtGateKey& key, Word m, const RingConfig& cfg) {
  const Word half = Word{1} << (cfg.ell - 1);
  Word z = cfg.sub(dcf_eval(key.dcf, m, cfg), dcf_eval(key.dcf, cfg.add(m, half), cfg));
  if (party == 1) z = cfg.add(z, static_cast<Word>(msb(m, cfg.ell)));
  return z;
}

PendingLt lt_prepare(Session& s, Round& r, std::span<const Word> x,
                     std::span<const Word> omega) {
  if (x.size() != omega.size()) throw UsageError("lt_gate: one threshold per input required");
  const auto& cfg = s.ring();
  PendingLt p{s.dealer().lt_gates(x.size()), 0};
  const auto keys = p.keys.peek();
  Shares masked(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    masked[i] = lt_mask(x[i], keys[i], s.constant(omega[i]), cfg);
  }
  p.slot = r.open(std::move(masked), cfg.ell);
  return p;
}

PendingLt lt_prepare(Session& s, Round& r, std::span<const Word> x, Word omega) {
  const Shares omegas(x.size(), omega);
  return lt_prepare(s, r, x, omegas);
}

Shares lt_finish(Session& s, const Round& r, PendingLt& p) {
  const auto& m = r.opened(p.slot);
  const auto keys = p.keys.take(m.size(), "lt_gate");
  Shares z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) z[i] = lt_eval_local(s.index(), keys[i], m[i], s.ring());
  return z;
}

Shares lt_gate(Session& s, std::span<const Word> x, Word omega) {
  Round r(s);
  auto p = lt_prepare(s, r, x, omega);
  r.run();
  return lt_finish(s, r, p);
}

void complement_bits(Session& s, Shares& bits) {
  const auto& cfg = s.ring();
  for (auto& b : bits) b = cfg.sub(s.constant(1), b);
}

Shares ge_bit(Session& s, std::span<const Word> x, Word omega) {
  auto z = lt_gate(s, x, omega);
  complement_bits(s, z);
  return z;
}

std::vector<Winner> argmax(Session& s, std::span<const Candidates> groups) {
  const auto& cfg = s.ring();
  std::vector<Candidates> cur(groups.begin(), groups.end());
  for (std::size_t g = 0; g < cur.size(); ++g) {
    const auto& c = cur[g];
    if (c.value.empty()) throw UsageError("argmax: group " + std::to_string(g) + " is empty");
    if (c.tag0.size() != c.value.size() || c.tag1.size() != c.value.size()) {
      throw UsageError("argmax: tags and values differ in length");
    }
  }

  auto pending = [&] {
    for (const auto& c : cur) {
      if (c.value.size() > 1) return true;
    }
    return false;
  };

  while (pending()) {
    // Left operand a = 2j, right operand b = 2j + 1 within every group.
    Shares diff;
    for (const auto& c : cur) {
      for (std::size_t j = 0; j + 1 < c.value.size(); j += 2) {
        diff.push_back(cfg.sub(c.value[j], c.value[j + 1]));
      }
    }
    Round compare_round(s);
    auto lt = lt_prepare(s, compare_round, diff, Word{0});
    compare_round.run();
    const Shares right_wins = lt_finish(s, compare_round, lt);

    // Select value and both tags under one batched product.
    Shares bit, right, left;
    std::size_t k = 0;
    for (const auto& c : cur) {
      for (std::size_t j = 0; j + 1 < c.value.size(); j += 2, ++k) {
        for (const Shares* v : {&c.value, &c.tag0, &c.tag1}) {
          bit.push_back(right_wins[k]);
          right.push_back((*v)[j + 1]);
          left.push_back((*v)[j]);
        }
      }
    }
    Round select_round(s);
    auto sel = select_prepare(s, select_round, bit, right, left);
    select_round.run();
    const Shares picked = select_finish(s, select_round, sel, left);

    std::size_t at = 0;
    for (auto& c : cur) {
      Candidates next;
      const std::size_t n = c.value.size();
      for (std::size_t j = 0; j + 1 < n; j += 2) {
        next.value.push_back(picked[at++]);
        next.tag0.push_back(picked[at++]);
        next.tag1.push_back(picked[at++]);
      }
      if (n % 2 == 1) {
        next.value.push_back(c.value[n - 1]);
        next.tag0.push_back(c.tag0[n - 1]);
        next.tag1.push_back(c.tag1[n - 1]);
      }
      c = std::move(next);
    }
  }

  std::vector<Winner> out;
  out.reserve(cur.size());
  for (const auto& c : cur) out.push_back({c.value[0], c.tag0[0], c.tag1[0]});
  return out;
}

}  // namespace fssboost
