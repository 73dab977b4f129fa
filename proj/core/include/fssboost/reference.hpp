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

// Plaintext gradient boosting in two modes.
//
//   kExact:  real arithmetic, true sigmoid, the classic gain
//            (G_L^2/(H_L+g) + G_R^2/(H_R+g) - G^2/(H+g)) / 2 and
//            w = -eta G / (H + gamma).
//   kMirror: the ring arithmetic of the secure trainer, replayed in the clear:
//            table sigmoid, reduced-precision division-free score, table leaf
//            weight and the same tournament tie rule. Must agree with the
//            secure trainer node for node.

#ifndef FSSBOOST_REFERENCE_HPP_
#define FSSBOOST_REFERENCE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fssboost/config.hpp"
#include "fssboost/data.hpp"
#include "fssboost/ring.hpp"
#include "fssboost/tree.hpp"

namespace fssboost {

enum class OracleMode { kExact, kMirror };

struct ReferenceRun {
  PlainModel model;
  int gain_bits = 0;
  // Ring margins of every training sample after each tree (mirror only).
  std::vector<std::vector<Word>> margins_after_tree;
};

ReferenceRun plain_train(const Dataset& train, const BucketMatrix& bins, const TrainConfig& cfg,
                         OracleMode mode);

// Index of the tournament winner: adjacent pairs, right operand wins only when
// strictly larger (signed ring comparison of the difference), odd element
// passes through. Equals the first maximum whenever no difference wraps.
std::size_t tournament_argmax(std::span<const Word> values, const RingConfig& cfg);
std::size_t tournament_argmax(std::span<const double> values);

// Brute-force validators over explicit small domains.
namespace brute {
Word dot(std::span<const Word> s, std::span<const Word> g, const RingConfig& cfg);
bool signed_less(Word x, Word y, const RingConfig& cfg);
// Table entry selected by the count of boundaries at or below x.
Word piecewise(std::span<const std::int64_t> boundaries, std::span<const Word> table,
               std::int64_t x);
// s * g over Z_{2^ell} for a bit s and a signed g.
Word compressed_mul(int s, std::int64_t g, const RingConfig& cfg);
}  // namespace brute

}  // namespace fssboost

#endif  // FSSBOOST_REFERENCE_HPP_
