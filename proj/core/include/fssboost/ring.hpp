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

// Arithmetic over Z_{2^ell} and the fixed-point encoding used by every
// protocol. Ring words are carried as uint64_t and reduced with the
// configuration's mask; widths below 64 exist so that small rings can be
// tested exhaustively.

#ifndef FSSBOOST_RING_HPP_
#define FSSBOOST_RING_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace fssboost {

using Word = std::uint64_t;

struct RingConfig {
  int ell = 64;    // ring bit width
  int ell_f = 16;  // fraction bits

  // Width of the compressed sub-ring used by the aggregation protocol.
  constexpr int ell_c() const { return ell_f + 2; }

  constexpr Word mask() const {
    return ell >= 64 ? ~Word{0} : ((Word{1} << ell) - 1);
  }
  constexpr Word compressed_mask() const { return (Word{1} << ell_c()) - 1; }

  constexpr Word reduce(Word v) const { return v & mask(); }
  constexpr Word add(Word a, Word b) const { return (a + b) & mask(); }
  constexpr Word sub(Word a, Word b) const { return (a - b) & mask(); }
  constexpr Word mul(Word a, Word b) const { return (a * b) & mask(); }
  constexpr Word neg(Word a) const { return (Word{0} - a) & mask(); }

  // Two's-complement view of a reduced word.
  constexpr std::int64_t to_signed(Word v) const {
    v &= mask();
    if (ell < 64 && (v >> (ell - 1)) != 0) {
      return static_cast<std::int64_t>(v) - (std::int64_t{1} << (ell - 1)) -
             (std::int64_t{1} << (ell - 1));
    }
    return static_cast<std::int64_t>(v);
  }
  constexpr Word from_signed(std::int64_t v) const {
    return static_cast<Word>(v) & mask();
  }

  constexpr Word one() const { return Word{1} << ell_f; }

  // Throws SetupError unless 0 < ell_f + 2 < ell <= 64.
  void validate() const;

  friend constexpr bool operator==(const RingConfig&, const RingConfig&) = default;
};

struct RingElement {
  Word value = 0;
  friend constexpr bool operator==(RingElement, RingElement) = default;
};

// Element of Z_{2^{ell_c}}.
struct CompressedElement {
  Word value = 0;
  friend constexpr bool operator==(CompressedElement, CompressedElement) = default;
};

// round(x * 2^ell_f) mod 2^ell. Throws RangeError when |x| >= 2^{ell-ell_f-1}.
RingElement encode(double x, const RingConfig& cfg);
double decode(RingElement e, const RingConfig& cfg);
inline double decode(Word w, const RingConfig& cfg) { return decode(RingElement{w}, cfg); }

// Arithmetic right shift of the signed interpretation.
RingElement truncate(RingElement e, int bits, const RingConfig& cfg);

// Local share-wise truncation of a two-party additive sharing. Reconstructs
// to truncate(x) up to one unit in the last place, except with probability
// about |x| / 2^{ell-1}.
Word truncate_share(Word share, int bits, int party, const RingConfig& cfg);

// Top bit of a `width`-bit value.
constexpr int msb(Word v, int width) { return static_cast<int>((v >> (width - 1)) & 1U); }
inline int msb(RingElement e, const RingConfig& cfg) { return msb(e.value, cfg.ell); }
inline int msb(CompressedElement e, const RingConfig& cfg) { return msb(e.value, cfg.ell_c()); }

std::vector<Word> encode_all(std::span<const double> xs, const RingConfig& cfg);
std::vector<double> decode_all(std::span<const Word> ws, const RingConfig& cfg);

}  // namespace fssboost

#endif  // FSSBOOST_RING_HPP_
