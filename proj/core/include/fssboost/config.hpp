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

// Training configuration shared by the secure trainer and the plaintext
// reference, plus the public tables both derive from it.

#ifndef FSSBOOST_CONFIG_HPP_
#define FSSBOOST_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fssboost/dcf.hpp"
#include "fssboost/lut.hpp"
#include "fssboost/prg.hpp"
#include "fssboost/ring.hpp"

namespace fssboost {

struct TrainConfig {
  int trees = 5;      // T
  int depth = 4;      // D; 0 builds a single leaf
  int buckets = 8;    // B
  int segments = 12;  // n
  double gamma = 1.0;
  double eta = 1.0;
  RingConfig ring;
  std::uint64_t seed = 1;
  DcfMode dcf_mode = DcfMode::kTree;
  int gain_bits = 0;  // fraction bits of the gain aggregates; 0 picks the largest safe value

  Block session_seed() const { return Block{seed, 0x6673'7362'6f6f'7374ULL}; }

  // Throws UsageError on invalid parameters.
  void validate() const;
  // Checks the overflow budget for n_samples training rows and returns the
  // gain precision in effect. Throws SetupError naming the violated bound.
  int resolve_gain_bits(std::size_t n_samples) const;
};

struct TrainingTables {
  int gain_bits = 0;
  SigmoidTable sigmoid;          // p and h at ell_f fraction bits
  std::vector<Word> p_coarse;    // p at gain_bits
  std::vector<Word> h_coarse;    // h at gain_bits
  LeafWeightTable leaf;          // eta * w_i
  Word gamma_full = 0;           // encode(gamma)
  Word gamma_coarse = 0;         // round(gamma * 2^gain_bits)
  Word label_full = 0;           // 2^ell_f
  Word label_coarse = 0;         // 2^gain_bits
};

TrainingTables make_tables(const TrainConfig& cfg, int gain_bits);

}  // namespace fssboost

#endif  // FSSBOOST_CONFIG_HPP_
