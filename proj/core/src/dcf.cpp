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

#include "fssboost/dcf.hpp"

#include <cstring>

namespace fssboost {
namespace {

struct Expanded {
  Block seed[2];  // left, right
  std::uint8_t t[2];
  Word v[2];
};

Expanded expand(Block s, const RingConfig& cfg) {
  const auto blocks = expand_seed(s);
  Expanded e;
  for (int dir = 0; dir < 2; ++dir) {
    e.t[dir] = static_cast<std::uint8_t>(blocks[dir].lo & 1U);
    e.seed[dir] = blocks[dir];
    e.seed[dir].lo &= ~std::uint64_t{1};
    e.v[dir] = cfg.reduce(blocks[2 + dir].lo);
  }
  return e;
}

Word convert(Block s, const RingConfig& cfg) { return cfg.reduce(s.lo); }

int bit_at(Word x, int level, int ell) { return static_cast<int>((x >> (ell - 1 - level)) & 1U); }

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::size_t DcfKey::size_bytes() const { return serialize().size(); }

std::vector<std::uint8_t> DcfKey::serialize() const {
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(party));
  out.push_back(static_cast<std::uint8_t>(ell));
  out.push_back(static_cast<std::uint8_t>(mode));
  if (mode == DcfMode::kIdeal) {
    put_u64(out, ideal_alpha);
    put_u64(out, ideal_beta);
    put_u64(out, ideal_prf.lo);
    put_u64(out, ideal_prf.hi);
    return out;
  }
  put_u64(out, root_seed.lo);
  put_u64(out, root_seed.hi);
  for (const auto& level : levels) {
    put_u64(out, level.seed_cw.lo);
    put_u64(out, level.seed_cw.hi);
    put_u64(out, level.value_cw);
    out.push_back(static_cast<std::uint8_t>(level.t_left_cw | (level.t_right_cw << 1)));
  }
  put_u64(out, final_cw);
  return out;
}

std::array<DcfKey, 2> dcf_gen(Word alpha, Word beta, const RingConfig& cfg, CtrPrg& rng,
                              DcfMode mode) {
  alpha = cfg.reduce(alpha);
  beta = cfg.reduce(beta);
  std::array<DcfKey, 2> keys;
  for (int b = 0; b < 2; ++b) {
    keys[b].party = b;
    keys[b].ell = cfg.ell;
    keys[b].mode = mode;
  }

  if (mode == DcfMode::kIdeal) {
    const Block prf = rng.next_block();
    for (auto& k : keys) {
      k.ideal_alpha = alpha;
      k.ideal_beta = beta;
      k.ideal_prf = prf;
    }
    return keys;
  }

  Block s[2] = {rng.next_block(), rng.next_block()};
  std::uint8_t t[2] = {0, 1};
  keys[0].root_seed = s[0];
  keys[1].root_seed = s[1];
  keys[0].levels.resize(cfg.ell);
  keys[1].levels.resize(cfg.ell);

  Word v_alpha = 0;
  for (int i = 0; i < cfg.ell; ++i) {
    const Expanded e0 = expand(s[0], cfg);
    const Expanded e1 = expand(s[1], cfg);
    const int a = bit_at(alpha, i, cfg.ell);
    const int keep = a;
    const int lose = 1 - a;
    // (-1)^{t1} applied to ring words.
    auto sign = [&](Word w) { return t[1] ? cfg.neg(w) : w; };

    DcfLevel cw;
    cw.seed_cw = e0.seed[lose] ^ e1.seed[lose];
    Word v_cw = cfg.sub(cfg.sub(e1.v[lose], e0.v[lose]), v_alpha);
    if (lose == 0) v_cw = cfg.add(v_cw, beta);
    cw.value_cw = sign(v_cw);
    v_alpha = cfg.add(cfg.sub(v_alpha, e1.v[keep]), cfg.add(e0.v[keep], sign(cw.value_cw)));
    cw.t_left_cw = static_cast<std::uint8_t>(e0.t[0] ^ e1.t[0] ^ a ^ 1);
    cw.t_right_cw = static_cast<std::uint8_t>(e0.t[1] ^ e1.t[1] ^ a);
    const std::uint8_t t_keep_cw = keep == 0 ? cw.t_left_cw : cw.t_right_cw;

    const Expanded* e[2] = {&e0, &e1};
    for (int b = 0; b < 2; ++b) {
      Block next = e[b]->seed[keep];
      if (t[b]) next ^= cw.seed_cw;
      const std::uint8_t next_t = static_cast<std::uint8_t>(e[b]->t[keep] ^ (t[b] & t_keep_cw));
      s[b] = next;
      t[b] = next_t;
    }
    keys[0].levels[i] = cw;
    keys[1].levels[i] = cw;
  }
  Word final_cw = cfg.sub(cfg.sub(convert(s[1], cfg), convert(s[0], cfg)), v_alpha);
  if (t[1]) final_cw = cfg.neg(final_cw);
  keys[0].final_cw = final_cw;
  keys[1].final_cw = final_cw;
  return keys;
}

Word dcf_eval(const DcfKey& key, Word x, const RingConfig& cfg) {
  x = cfg.reduce(x);
  if (key.mode == DcfMode::kIdeal) {
    const Word mask = convert(expand_seed(key.ideal_prf ^ Block{x, 0})[0], cfg);
    if (key.party == 0) return mask;
    const Word f = x < key.ideal_alpha ? key.ideal_beta : Word{0};
    return cfg.sub(f, mask);
  }

  Block s = key.root_seed;
  std::uint8_t t = static_cast<std::uint8_t>(key.party);
  Word v = 0;
  for (int i = 0; i < cfg.ell; ++i) {
    const DcfLevel& cw = key.levels[i];
    Expanded e = expand(s, cfg);
    if (t) {
      e.seed[0] ^= cw.seed_cw;
      e.seed[1] ^= cw.seed_cw;
      e.t[0] ^= cw.t_left_cw;
      e.t[1] ^= cw.t_right_cw;
    }
    const int dir = bit_at(x, i, cfg.ell);
    Word step = e.v[dir];
    if (t) step = cfg.add(step, cw.value_cw);
    v = key.party == 0 ? cfg.add(v, step) : cfg.sub(v, step);
    s = e.seed[dir];
    t = e.t[dir];
  }
  Word last = convert(s, cfg);
  if (t) last = cfg.add(last, key.final_cw);
  return key.party == 0 ? cfg.add(v, last) : cfg.sub(v, last);
}

}  // namespace fssboost
