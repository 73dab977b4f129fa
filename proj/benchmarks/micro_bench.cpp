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

#include <benchmark/benchmark.h>

#include <array>

#include "fssboost/aggregate.hpp"
#include "fssboost/compare.hpp"
#include "fssboost/dcf.hpp"
#include "fssboost/gain.hpp"
#include "fssboost/lut.hpp"
#include "fssboost/mpc.hpp"

namespace fssboost {
namespace {

const RingConfig kRing;

std::array<Shares, 2> random_shares(std::size_t n, int int_bits, std::uint64_t seed) {
  CtrPrg rng(Block{seed, 0xbe7c}, Block{});
  const std::uint64_t span = std::uint64_t{1} << (kRing.ell_f + int_bits + 1);
  std::array<Shares, 2> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Word x = kRing.from_signed(static_cast<std::int64_t>(rng.uniform(span)) -
                                     static_cast<std::int64_t>(span / 2));
    const Word r = rng.next_bits(kRing.ell);
    out[0].push_back(kRing.sub(x, r));
    out[1].push_back(r);
  }
  return out;
}

void report_bytes(benchmark::State& state, const Meter& m) {
  state.counters["rounds"] = static_cast<double>(m.rounds);
  state.counters["bits/elem"] = static_cast<double>(m.bits) / static_cast<double>(state.range(0));
}

void BM_DcfGen(benchmark::State& state) {
  CtrPrg rng(Block{1, 1}, Block{});
  for (auto _ : state) benchmark::DoNotOptimize(dcf_gen(rng.next_bits(64), 1, kRing, rng));
}
BENCHMARK(BM_DcfGen);

void BM_DcfEval(benchmark::State& state) {
  CtrPrg rng(Block{2, 1}, Block{});
  const auto keys = dcf_gen(rng.next_bits(64), 1, kRing, rng);
  Word x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dcf_eval(keys[0], x, kRing));
    x += 0x9e3779b97f4a7c15ULL;
  }
}
BENCHMARK(BM_DcfEval);

void BM_AggOnline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto s = random_shares(n, 0, 3);
  for (auto& v : s[0]) v &= 1;  // any shares of some bit vector
  s[1].assign(n, 0);
  const auto g = random_shares(n, 0, 4);
  Meter meter;
  for (auto _ : state) {
    auto r = run_two_party([&](Session& p) { return agg_online(p, s[p.index()], g[p.index()]); },
                           Block{5, 5}, kRing);
    meter = r.meters[0];
  }
  report_bytes(state, meter);
}
BENCHMARK(BM_AggOnline)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SigmoidOnline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_shares(n, 3, 6);
  const SigmoidTable table = SigmoidTable::build(12, kRing);
  Meter meter;
  for (auto _ : state) {
    auto r = run_two_party([&](Session& p) { return sigmoid_online(p, x[p.index()], table); },
                           Block{7, 7}, kRing);
    meter = r.meters[0];
  }
  report_bytes(state, meter);
}
BENCHMARK(BM_SigmoidOnline)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_LtGate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_shares(n, 3, 8);
  Meter meter;
  for (auto _ : state) {
    auto r = run_two_party([&](Session& p) { return lt_gate(p, x[p.index()], 0); }, Block{9, 9},
                           kRing);
    meter = r.meters[0];
  }
  report_bytes(state, meter);
}
BENCHMARK(BM_LtGate)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_GainOnline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_shares(n, 3, 10), b = random_shares(n, 3, 11);
  Meter meter;
  for (auto _ : state) {
    auto r = run_two_party(
        [&](Session& p) {
          const int i = p.index();
          return gain_online(p, AggregateShares{a[i], b[i], a[i], b[i], a[i]}, Word{1} << 4);
        },
        Block{12, 12}, kRing);
    meter = r.meters[0];
  }
  report_bytes(state, meter);
}
BENCHMARK(BM_GainOnline)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fssboost

BENCHMARK_MAIN();
