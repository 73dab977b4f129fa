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

#ifndef FSSBOOST_PRG_HPP_
#define FSSBOOST_PRG_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <span>

#include "fssboost/ring.hpp"

namespace fssboost {

// 128-bit value: PRG seeds, AES blocks, session seeds.
struct Block {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend constexpr Block operator^(Block a, Block b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
  Block& operator^=(Block o) {
    lo ^= o.lo;
    hi ^= o.hi;
    return *this;
  }
  friend constexpr bool operator==(Block, Block) = default;
};

// AES-128 in counter mode. The stream is a pure function of (key, nonce).
class CtrPrg {
 public:
  CtrPrg(Block key, Block nonce);
  ~CtrPrg();
  CtrPrg(CtrPrg&&) noexcept;
  CtrPrg& operator=(CtrPrg&&) noexcept;
  CtrPrg(const CtrPrg&) = delete;
  CtrPrg& operator=(const CtrPrg&) = delete;

  std::uint64_t next_u64();
  Block next_block();
  int next_bit();
  // Uniform value with the low `bits` bits random (bits in [0, 64]).
  Word next_bits(int bits);
  // Unbiased draw in [0, bound).
  std::uint64_t uniform(std::uint64_t bound);

 private:
  void refill();

  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Length-quadrupling PRG used by the DCF key tree: fixed-key AES in
// Matyas-Meyer-Oseas mode over four tweaks of the seed.
std::array<Block, 4> expand_seed(Block seed);

}  // namespace fssboost

#endif  // FSSBOOST_PRG_HPP_
