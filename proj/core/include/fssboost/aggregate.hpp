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

// Secret-shared dot product sum_i s_i * g_i for indicator bits s_i and small
// gradients g_i in [-2^{ell_f}, 2^{ell_f}), with compressed masked openings:
// one masked bit and one ell_c-bit masked gradient per element.
//
// With bias B = 2^{ell_f}, g' = g + B, g_hat = g' + r_g mod 2^{ell_c} and
// s_hat = s ^ r_s, every product is recovered exactly as
//
//   s*g = s_hat*g_hat - s_hat*r_g + s_hat*(1 - msb(g_hat))*v*2^{ell_c}
//       + (1 - 2 s_hat)*(g_hat*r_s - u + (1 - msb(g_hat))*m*2^{ell_c})
//       - (s_hat + (1 - 2 s_hat)*r_s)*B
//
// using the key shares of r_s, r_g, u = r_s*r_g, v = msb(r_g), m = r_s*v.

#ifndef FSSBOOST_AGGREGATE_HPP_
#define FSSBOOST_AGGREGATE_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fssboost/dealer.hpp"
#include "fssboost/mpc.hpp"

namespace fssboost {

std::array<AggKey, 2> agg_offline(std::size_t n, Dealer& dealer);

// This party's shares of the masked pair: s_hat share is one bit, g_hat share
// is an ell_c-bit word. Party 1 folds in the bias.
struct MaskedPairShare {
  Word s_hat = 0;
  Word g_hat = 0;
};
MaskedPairShare agg_mask(int party, Word s, Word g, const AggKeyShare& key,
                         const RingConfig& cfg);

// This party's share of s*g from the opened pair.
Word agg_combine(int party, Word s_hat, Word g_hat, const AggKeyShare& key,
                 const RingConfig& cfg);

struct AggRequest {
  std::span<const Word> s;
  std::span<const Word> g;
};

struct PendingAgg {
  std::vector<AggKey> keys;
  std::vector<std::size_t> sizes;
  std::size_t s_slot = 0;
  std::size_t g_slot = 0;
};

// Queues every request's masked pairs into the round (ell_c + 1 bits per
// element). The finish half returns one sum per request.
PendingAgg agg_prepare(Session& s, Round& r, std::span<const AggRequest> requests);
Shares agg_finish(Session& s, const Round& r, PendingAgg& p);

Shares agg_batch(Session& s, std::span<const AggRequest> requests);
Word agg_online(Session& s, std::span<const Word> bits, std::span<const Word> g);

}  // namespace fssboost

#endif  // FSSBOOST_AGGREGATE_HPP_
