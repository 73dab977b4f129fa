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

// 2-out-of-2 additive sharing over Z_{2^ell} and XOR sharing over Z_2.
//
// Local (non-interactive) operations live here; the interactive ones that
// need a channel are in mpc.hpp. By convention public constants are folded
// in by party 1.

#ifndef FSSBOOST_SHARING_HPP_
#define FSSBOOST_SHARING_HPP_

#include <cstdint>
#include <utility>

#include "fssboost/prg.hpp"
#include "fssboost/ring.hpp"

namespace fssboost {

class PartyId {
 public:
  // Throws UsageError unless b is 0 or 1.
  explicit PartyId(int b);

  constexpr int index() const { return b_; }
  constexpr PartyId other() const { return PartyId(1 - b_, Unchecked{}); }

  friend constexpr bool operator==(PartyId, PartyId) = default;

 private:
  struct Unchecked {};
  constexpr PartyId(int b, Unchecked) : b_(b) {}
  int b_;
};

inline const PartyId kParty0{0};
inline const PartyId kParty1{1};

struct ArithShare {
  PartyId party;
  RingElement value;
};

struct BoolShare {
  PartyId party;
  std::uint8_t bit = 0;
};

// Shares (x - r, r) for a uniform mask r drawn from `rng`.
std::pair<ArithShare, ArithShare> share(RingElement x, CtrPrg& rng, const RingConfig& cfg);
// Same with an explicit mask.
std::pair<ArithShare, ArithShare> share_with_mask(RingElement x, Word r, const RingConfig& cfg);

// Throws ProtocolError when both shares claim the same party.
RingElement open(const ArithShare& s0, const ArithShare& s1, const RingConfig& cfg);
std::uint8_t open(const BoolShare& s0, const BoolShare& s1);

ArithShare add(const ArithShare& x, const ArithShare& y, const RingConfig& cfg);
ArithShare sub(const ArithShare& x, const ArithShare& y, const RingConfig& cfg);
ArithShare add_const(const ArithShare& x, Word c, const RingConfig& cfg);
ArithShare mul_const(const ArithShare& x, Word c, const RingConfig& cfg);

// Low bit of the share. Valid when the shared value is 0 or 1: the low bit of
// the modular sum receives no carry, so the XOR of the two low bits is x.
BoolShare mod2_downcast(const ArithShare& x);

// One party's share of a multiplication triple (a, b, c = a*b).
struct TripleShare {
  Word a = 0;
  Word b = 0;
  Word c = 0;
};

// One party's share of a square pair (a, a^2).
struct SquareShare {
  Word a = 0;
  Word aa = 0;
};

// Beaver multiplication split in its two local halves around the single
// exchange: mask() produces this party's shares of (x - a, y - b); after both
// are opened, combine() yields this party's share of x*y.
std::pair<Word, Word> beaver_mask(Word x, Word y, const TripleShare& t, const RingConfig& cfg);
Word beaver_combine(int party, Word d, Word e, const TripleShare& t, const RingConfig& cfg);

Word square_mask(Word x, const SquareShare& s, const RingConfig& cfg);
Word square_combine(int party, Word d, const SquareShare& s, const RingConfig& cfg);

}  // namespace fssboost

#endif  // FSSBOOST_SHARING_HPP_
