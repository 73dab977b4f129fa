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

#include "fssboost/sharing.hpp"

#include <string>

#include "fssboost/errors.hpp"

namespace fssboost {

PartyId::PartyId(int b) : b_(b) {
  if (b != 0 && b != 1) throw UsageError("party id must be 0 or 1, got " + std::to_string(b));
}

std::pair<ArithShare, ArithShare> share(RingElement x, CtrPrg& rng, const RingConfig& cfg) {
  return share_with_mask(x, rng.next_bits(cfg.ell), cfg);
}

std::pair<ArithShare, ArithShare> share_with_mask(RingElement x, Word r, const RingConfig& cfg) {
  return {ArithShare{kParty0, RingElement{cfg.sub(x.value, r)}},
          ArithShare{kParty1, RingElement{cfg.reduce(r)}}};
}

RingElement open(const ArithShare& s0, const ArithShare& s1, const RingConfig& cfg) {
  if (s0.party == s1.party) {
    throw ProtocolError("open: both shares belong to party " + std::to_string(s0.party.index()));
  }
  return RingElement{cfg.add(s0.value.value, s1.value.value)};
}

std::uint8_t open(const BoolShare& s0, const BoolShare& s1) {
  if (s0.party == s1.party) {
    throw ProtocolError("open: both shares belong to party " + std::to_string(s0.party.index()));
  }
  return static_cast<std::uint8_t>((s0.bit ^ s1.bit) & 1U);
}

ArithShare add(const ArithShare& x, const ArithShare& y, const RingConfig& cfg) {
  if (!(x.party == y.party)) throw ProtocolError("add: operands held by different parties");
  return {x.party, RingElement{cfg.add(x.value.value, y.value.value)}};
}

ArithShare sub(const ArithShare& x, const ArithShare& y, const RingConfig& cfg) {
  if (!(x.party == y.party)) throw ProtocolError("sub: operands held by different parties");
  return {x.party, RingElement{cfg.sub(x.value.value, y.value.value)}};
}

ArithShare add_const(const ArithShare& x, Word c, const RingConfig& cfg) {
  if (x.party.index() == 0) return x;
  return {x.party, RingElement{cfg.add(x.value.value, c)}};
}

ArithShare mul_const(const ArithShare& x, Word c, const RingConfig& cfg) {
  return {x.party, RingElement{cfg.mul(x.value.value, c)}};
}

BoolShare mod2_downcast(const ArithShare& x) {
  return {x.party, static_cast<std::uint8_t>(x.value.value & 1U)};
}

std::pair<Word, Word> beaver_mask(Word x, Word y, const TripleShare& t, const RingConfig& cfg) {
  return {cfg.sub(x, t.a), cfg.sub(y, t.b)};
}

Word beaver_combine(int party, Word d, Word e, const TripleShare& t, const RingConfig& cfg) {
  Word z = cfg.add(t.c, cfg.add(cfg.mul(d, t.b), cfg.mul(e, t.a)));
  if (party == 1) z = cfg.add(z, cfg.mul(d, e));
  return z;
}

Word square_mask(Word x, const SquareShare& s, const RingConfig& cfg) { return cfg.sub(x, s.a); }

Word square_combine(int party, Word d, const SquareShare& s, const RingConfig& cfg) {
  Word z = cfg.add(s.aa, cfg.mul(Word{2}, cfg.mul(d, s.a)));
  if (party == 1) z = cfg.add(z, cfg.mul(d, d));
  return z;
}

}  // namespace fssboost
