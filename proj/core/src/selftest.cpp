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

#include "fssboost/selftest.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <tuple>

#include "fssboost/aggregate.hpp"
#include "fssboost/compare.hpp"
#include "fssboost/dcf.hpp"
#include "fssboost/lut.hpp"
#include "fssboost/mpc.hpp"
#include "fssboost/prg.hpp"
#include "fssboost/reference.hpp"

namespace fssboost {
namespace {

constexpr RingConfig kSmall{8, 3};

std::pair<Word, Word> split(Word x, const RingConfig& cfg, CtrPrg& rng) {
  const Word r = rng.next_bits(cfg.ell);
  return {cfg.sub(x, r), r};
}

SelfCheck dcf_check(CtrPrg& rng) {
  SelfCheck c{"dcf ell=8, all (alpha, x)"};
  for (Word alpha = 0; alpha < 256; ++alpha) {
    const auto keys = dcf_gen(alpha, 1, kSmall, rng);
    for (Word x = 0; x < 256; ++x, ++c.total) {
      const Word y = kSmall.add(dcf_eval(keys[0], x, kSmall), dcf_eval(keys[1], x, kSmall));
      c.passed += y == (x < alpha ? 1U : 0U);
    }
  }
  return c;
}

SelfCheck lt_check(CtrPrg& rng) {
  SelfCheck c{"comparison gate ell=8, all (mask, x)"};
  for (Word alpha = 0; alpha < 256; ++alpha) {
    const auto keys = lt_gate_keys(alpha, kSmall, rng);
    for (Word x = 0; x < 256; ++x, ++c.total) {
      const auto [x0, x1] = split(x, kSmall, rng);
      const Word m = kSmall.add(lt_mask(x0, keys[0], 0, kSmall), lt_mask(x1, keys[1], 0, kSmall));
      const Word z = kSmall.add(lt_eval_local(0, keys[0], m, kSmall),
                                lt_eval_local(1, keys[1], m, kSmall));
      c.passed += z == (brute::signed_less(x, 0, kSmall) ? 1U : 0U);
    }
  }
  return c;
}

SelfCheck agg_check(CtrPrg& rng) {
  SelfCheck c{"compressed product ell=8, all (s, g, r_s, r_g)"};
  const RingConfig& cfg = kSmall;
  for (Word s = 0; s < 2; ++s) {
    for (std::int64_t g = -8; g < 8; ++g) {
      for (Word rs = 0; rs < 2; ++rs) {
        for (Word rg = 0; rg <= cfg.compressed_mask(); ++rg, ++c.total) {
          const Word v = static_cast<Word>(msb(rg, cfg.ell_c()));
          const std::array<Word, 5> plain = {rs, rg, cfg.mul(rs, rg), v, rs * v};
          std::array<Word, 5> a{}, b{};
          for (int i = 0; i < 5; ++i) std::tie(a[i], b[i]) = split(plain[i], cfg, rng);
          const AggKeyShare k0{a[0], a[1], a[2], a[3], a[4]};
          const AggKeyShare k1{b[0], b[1], b[2], b[3], b[4]};
          const auto [s0, s1] = split(s, cfg, rng);
          const auto [g0, g1] = split(cfg.from_signed(g), cfg, rng);
          const auto m0 = agg_mask(0, s0, g0, k0, cfg);
          const auto m1 = agg_mask(1, s1, g1, k1, cfg);
          const Word sh = (m0.s_hat + m1.s_hat) & 1U;
          const Word gh = (m0.g_hat + m1.g_hat) & cfg.compressed_mask();
          const Word out = cfg.add(agg_combine(0, sh, gh, k0, cfg), agg_combine(1, sh, gh, k1, cfg));
          c.passed += out == brute::compressed_mul(static_cast<int>(s), g, cfg);
        }
      }
    }
  }
  return c;
}

SelfCheck beaver_check(CtrPrg& rng, std::uint64_t seed) {
  SelfCheck c{"Beaver product ell=8, all (x, y)"};
  std::array<Shares, 2> xs, ys;
  Shares want;
  for (Word x = 0; x < 256; ++x) {
    for (Word y = 0; y < 256; ++y) {
      const auto [x0, x1] = split(x, kSmall, rng);
      const auto [y0, y1] = split(y, kSmall, rng);
      xs[0].push_back(x0);
      xs[1].push_back(x1);
      ys[0].push_back(y0);
      ys[1].push_back(y1);
      want.push_back(kSmall.mul(x, y));
    }
  }
  auto res = run_two_party([&](Session& s) { return mul(s, xs[s.index()], ys[s.index()]); },
                           Block{seed, 0xbea7}, kSmall);
  for (std::size_t i = 0; i < want.size(); ++i, ++c.total) {
    c.passed += kSmall.add(res.outputs[0][i], res.outputs[1][i]) == want[i];
  }
  return c;
}

SelfCheck sigmoid_check(CtrPrg& rng, std::uint64_t seed) {
  SelfCheck c{"table sigmoid ell=64 vs ring mirror, 2000 inputs"};
  const RingConfig cfg;
  const SigmoidTable table = SigmoidTable::build(12, cfg);
  std::array<Shares, 2> xs;
  Shares x;
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t v = static_cast<std::int64_t>(rng.uniform(24ULL << cfg.ell_f)) -
                           (std::int64_t{12} << cfg.ell_f);
    x.push_back(cfg.from_signed(v));
    const auto [a, b] = split(x.back(), cfg, rng);
    xs[0].push_back(a);
    xs[1].push_back(b);
  }
  auto res = run_two_party([&](Session& s) { return sigmoid_online(s, xs[s.index()], table); },
                           Block{seed, 0x5163}, cfg);
  for (std::size_t i = 0; i < x.size(); ++i, ++c.total) {
    c.passed += cfg.add(res.outputs[0][i], res.outputs[1][i]) == sigmoid_fixed(x[i], table, cfg);
  }
  return c;
}

}  // namespace

std::vector<SelfCheck> run_selftests(std::uint64_t seed) {
  CtrPrg rng(Block{seed, 0x5e1f}, Block{});
  const std::vector<std::function<SelfCheck()>> checks = {
      [&] { return dcf_check(rng); },
      [&] { return lt_check(rng); },
      [&] { return agg_check(rng); },
      [&] { return beaver_check(rng, seed); },
      [&] { return sigmoid_check(rng, seed); },
  };
  std::vector<SelfCheck> out;
  for (const auto& run : checks) {
    const auto start = std::chrono::steady_clock::now();
    SelfCheck c = run();
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fssboost
