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

// Distributed comparison function for f_{alpha,beta}(x) = beta * 1{x < alpha}
// over the ell-bit domain with payload in Z_{2^ell}. Keys are a binary tree
// of correction words walked MSB-first; each level costs one call to the
// length-quadrupling PRG (expand_seed).

#ifndef FSSBOOST_DCF_HPP_
#define FSSBOOST_DCF_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fssboost/prg.hpp"
#include "fssboost/ring.hpp"

namespace fssboost {

enum class DcfMode {
  kTree,   // real key tree, O(lambda * ell) key size
  kIdeal,  // dealer-simulated: keys carry alpha and a shared PRF key; for differential tests
};

struct DcfLevel {
  Block seed_cw;
  Word value_cw = 0;
  std::uint8_t t_left_cw = 0;
  std::uint8_t t_right_cw = 0;
};

struct DcfKey {
  static constexpr int kLambda = 128;

  int party = 0;
  int ell = 64;
  DcfMode mode = DcfMode::kTree;
  Block root_seed;
  std::vector<DcfLevel> levels;
  Word final_cw = 0;

  // kIdeal only.
  Word ideal_alpha = 0;
  Word ideal_beta = 0;
  Block ideal_prf;

  // Serialized size: root seed plus, per level, a seed correction word, a
  // payload correction word and two control bits, plus the final word.
  std::size_t size_bytes() const;
  std::vector<std::uint8_t> serialize() const;
};

std::array<DcfKey, 2> dcf_gen(Word alpha, Word beta, const RingConfig& cfg, CtrPrg& rng,
                              DcfMode mode = DcfMode::kTree);

// This party's additive share of beta * 1{x < alpha} (unsigned compare).
Word dcf_eval(const DcfKey& key, Word x, const RingConfig& cfg);

}  // namespace fssboost

#endif  // FSSBOOST_DCF_HPP_
