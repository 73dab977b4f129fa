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

// Trusted dealer for input-independent correlated randomness.
//
// Every request is namespaced by (kind, per-kind invocation counter) and
// served from its own AES-CTR stream keyed by the session seed, so the
// output is a pure function of the seed and the request sequence. A
// DealerStream is one party's view: it runs the same generator and keeps
// only its own half, which lets each party endpoint draw its preprocessing
// without a shared object between threads.

#ifndef FSSBOOST_DEALER_HPP_
#define FSSBOOST_DEALER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fssboost/dcf.hpp"
#include "fssboost/errors.hpp"
#include "fssboost/prg.hpp"
#include "fssboost/ring.hpp"
#include "fssboost/sharing.hpp"

namespace fssboost {

// Single-use bundle of one party's correlated randomness. Move-only;
// take() marks it consumed and throws ProtocolError on a second call.
template <typename Item>
class Correlated {
 public:
  Correlated() = default;
  Correlated(int party, std::vector<Item> items) : party_(party), items_(std::move(items)) {}

  Correlated(Correlated&& other) noexcept
      : party_(other.party_), items_(std::move(other.items_)), consumed_(other.consumed_) {
    other.consumed_ = true;
  }
  Correlated& operator=(Correlated&& other) noexcept {
    party_ = other.party_;
    items_ = std::move(other.items_);
    consumed_ = other.consumed_;
    other.consumed_ = true;
    return *this;
  }
  Correlated(const Correlated&) = delete;
  Correlated& operator=(const Correlated&) = delete;

  int party() const { return party_; }
  std::size_t size() const { return items_.size(); }
  bool consumed() const { return consumed_; }

  // Read-only access for dealer self-tests; does not consume.
  std::span<const Item> peek() const { return items_; }

  std::span<const Item> take(std::size_t expected, const char* what) {
    if (consumed_) throw ProtocolError(std::string(what) + ": correlated randomness reused");
    if (items_.size() != expected) {
      throw ProtocolError(std::string(what) + ": expected " + std::to_string(expected) +
                          " correlated items, bundle holds " + std::to_string(items_.size()));
    }
    consumed_ = true;
    return items_;
  }

 private:
  int party_ = 0;
  std::vector<Item> items_;
  bool consumed_ = false;
};

// Shares of two random bits r_a, r_b and their product, all over Z_{2^ell}.
struct BitProductShare {
  Word ra = 0;
  Word rb = 0;
  Word rab = 0;
};

// Shares of a random bit r_s, a random ring mask r_w and u = r_s * r_w.
struct BitArithShare {
  Word rs = 0;
  Word rw = 0;
  Word u = 0;
};

// One aggregation-key element: shares of r_s in Z_2, r_g in Z_{2^{ell_c}},
// u = r_s * r_g, v = msb(r_g), m = r_s * v. All shared over Z_{2^ell}.
struct AggKeyShare {
  Word rs = 0;
  Word rg = 0;
  Word u = 0;
  Word v = 0;
  Word m = 0;
};

// Masked less-than gate: DCF key at the mask alpha plus a share of alpha.
struct LtGateKey {
  DcfKey dcf;
  Word alpha = 0;
};

using TripleBatch = Correlated<TripleShare>;
using SquareBatch = Correlated<SquareShare>;
using BitProductBatch = Correlated<BitProductShare>;
using BitArithBatch = Correlated<BitArithShare>;
using AggKey = Correlated<AggKeyShare>;
using LtGateBatch = Correlated<LtGateKey>;

enum class CorrelationKind : std::uint32_t {
  kTriple = 1,
  kSquare = 2,
  kBitProduct = 3,
  kBitArith = 4,
  kAggregate = 5,
  kLtGate = 6,
};

// Per-kind request counts, used to audit preprocessing volume.
struct DealerCounters {
  std::uint64_t requests[8] = {};
  std::uint64_t items[8] = {};
};

class Dealer {
 public:
  Dealer(Block seed, RingConfig ring, DcfMode dcf_mode = DcfMode::kTree);

  std::array<TripleBatch, 2> triples(std::size_t n);
  std::array<SquareBatch, 2> squares(std::size_t n);
  std::array<BitProductBatch, 2> bit_products(std::size_t n);
  std::array<BitArithBatch, 2> bit_arith(std::size_t n);
  std::array<AggKey, 2> aggregation(std::size_t n);
  std::array<LtGateBatch, 2> lt_gates(std::size_t n);

  const RingConfig& ring() const { return ring_; }
  DcfMode dcf_mode() const { return dcf_mode_; }
  const DealerCounters& counters() const { return counters_; }

 private:
  CtrPrg next_stream(CorrelationKind kind, std::size_t items);
  // Splits plaintext x into (x - r, r).
  std::pair<Word, Word> split(Word x, CtrPrg& prg) const;

  Block seed_;
  RingConfig ring_;
  DcfMode dcf_mode_;
  DealerCounters counters_;
};

class DealerStream {
 public:
  DealerStream(Block seed, PartyId party, RingConfig ring, DcfMode dcf_mode = DcfMode::kTree);

  TripleBatch triples(std::size_t n) { return pick(dealer_.triples(n)); }
  SquareBatch squares(std::size_t n) { return pick(dealer_.squares(n)); }
  BitProductBatch bit_products(std::size_t n) { return pick(dealer_.bit_products(n)); }
  BitArithBatch bit_arith(std::size_t n) { return pick(dealer_.bit_arith(n)); }
  AggKey aggregation(std::size_t n) { return pick(dealer_.aggregation(n)); }
  LtGateBatch lt_gates(std::size_t n) { return pick(dealer_.lt_gates(n)); }

  PartyId party() const { return party_; }
  const DealerCounters& counters() const { return dealer_.counters(); }

 private:
  template <typename T>
  T pick(std::array<T, 2>&& both) {
    return std::move(both[party_.index()]);
  }

  Dealer dealer_;
  PartyId party_;
};

}  // namespace fssboost

#endif  // FSSBOOST_DEALER_HPP_
