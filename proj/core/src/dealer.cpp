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

#include "fssboost/dealer.hpp"

#include <tuple>

namespace fssboost {

Dealer::Dealer(Block seed, RingConfig ring, DcfMode dcf_mode)
    : seed_(seed), ring_(ring), dcf_mode_(dcf_mode) {
  ring_.validate();
}

CtrPrg Dealer::next_stream(CorrelationKind kind, std::size_t items) {
  const auto k = static_cast<std::uint32_t>(kind);
  const std::uint64_t counter = counters_.requests[k]++;
  counters_.items[k] += items;
  return CtrPrg(seed_, Block{counter, k});
}

std::pair<Word, Word> Dealer::split(Word x, CtrPrg& prg) const {
  const Word r = prg.next_bits(ring_.ell);
  return {ring_.sub(x, r), r};
}

std::array<TripleBatch, 2> Dealer::triples(std::size_t n) {
  CtrPrg prg = next_stream(CorrelationKind::kTriple, n);
  std::vector<TripleShare> s0(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word a = prg.next_bits(ring_.ell);
    const Word b = prg.next_bits(ring_.ell);
    std::tie(s0[i].a, s1[i].a) = split(a, prg);
    std::tie(s0[i].b, s1[i].b) = split(b, prg);
    std::tie(s0[i].c, s1[i].c) = split(ring_.mul(a, b), prg);
  }
  return {TripleBatch(0, std::move(s0)), TripleBatch(1, std::move(s1))};
}

std::array<SquareBatch, 2> Dealer::squares(std::size_t n) {
  CtrPrg prg = next_stream(CorrelationKind::kSquare, n);
  std::vector<SquareShare> s0(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word a = prg.next_bits(ring_.ell);
    std::tie(s0[i].a, s1[i].a) = split(a, prg);
    std::tie(s0[i].aa, s1[i].aa) = split(ring_.mul(a, a), prg);
  }
  return {SquareBatch(0, std::move(s0)), SquareBatch(1, std::move(s1))};
}

std::array<BitProductBatch, 2> Dealer::bit_products(std::size_t n) {
  CtrPrg prg = next_stream(CorrelationKind::kBitProduct, n);
  std::vector<BitProductShare> s0(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word ra = static_cast<Word>(prg.next_bit());
    const Word rb = static_cast<Word>(prg.next_bit());
    std::tie(s0[i].ra, s1[i].ra) = split(ra, prg);
    std::tie(s0[i].rb, s1[i].rb) = split(rb, prg);
    std::tie(s0[i].rab, s1[i].rab) = split(ra & rb, prg);
  }
  return {BitProductBatch(0, std::move(s0)), BitProductBatch(1, std::move(s1))};
}

std::array<BitArithBatch, 2> Dealer::bit_arith(std::size_t n) {
  CtrPrg prg = next_stream(CorrelationKind::kBitArith, n);
  std::vector<BitArithShare> s0(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word rs = static_cast<Word>(prg.next_bit());
    const Word rw = prg.next_bits(ring_.ell);
    std::tie(s0[i].rs, s1[i].rs) = split(rs, prg);
    std::tie(s0[i].rw, s1[i].rw) = split(rw, prg);
    std::tie(s0[i].u, s1[i].u) = split(ring_.mul(rs, rw), prg);
  }
  return {BitArithBatch(0, std::move(s0)), BitArithBatch(1, std::move(s1))};
}

std::array<AggKey, 2> Dealer::aggregation(std::size_t n) {
  CtrPrg prg = next_stream(CorrelationKind::kAggregate, n);
  const int width = ring_.ell_c();
  std::vector<AggKeyShare> s0(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word rs = static_cast<Word>(prg.next_bit());
    const Word rg = prg.next_bits(width);
    const Word v = static_cast<Word>(msb(rg, width));
    std::tie(s0[i].rs, s1[i].rs) = split(rs, prg);
    std::tie(s0[i].rg, s1[i].rg) = split(rg, prg);
    std::tie(s0[i].u, s1[i].u) = split(ring_.mul(rs, rg), prg);
    std::tie(s0[i].v, s1[i].v) = split(v, prg);
    std::tie(s0[i].m, s1[i].m) = split(rs & v, prg);
  }
  return {AggKey(0, std::move(s0)), AggKey(1, std::move(s1))};
}

std::array<LtGateBatch, 2> Dealer::lt_gates(std::size_t n) {
  CtrPrg prg = next_stream(CorrelationKind::kLtGate, n);
  std::vector<LtGateKey> s0(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word alpha = prg.next_bits(ring_.ell);
    auto keys = dcf_gen(alpha, Word{1}, ring_, prg, dcf_mode_);
    s0[i].dcf = std::move(keys[0]);
    s1[i].dcf = std::move(keys[1]);
    std::tie(s0[i].alpha, s1[i].alpha) = split(alpha, prg);
  }
  return {LtGateBatch(0, std::move(s0)), LtGateBatch(1, std::move(s1))};
}

DealerStream::DealerStream(Block seed, PartyId party, RingConfig ring, DcfMode dcf_mode)
    : dealer_(seed, ring, dcf_mode), party_(party) {}

}  // namespace fssboost
