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

// Division-free split score
//
//   G* = (H_R + gamma) G_L^2 + (H_L + gamma) G_R^2,  score = +G* if 2 H_L < H_X
//                                                    score = -G* otherwise
//
// The secure version runs on integer aggregates at a reduced precision of k
// fraction bits and never truncates: the score is an exact ring value at scale
// 2^{3k}, so the plaintext mirror reproduces it bit for bit. With |g| <= 1
// and 0 <= h <= 1/4 per sample, |G*| <= (N 2^k)^2 (N 2^k + gamma 2^k); k is
// chosen so that this stays below 2^{ell-2}, which keeps every score and
// every pairwise difference inside the comparison-safe range.

#ifndef FSSBOOST_GAIN_HPP_
#define FSSBOOST_GAIN_HPP_

#include <cstddef>

#include "fssboost/mpc.hpp"
#include "fssboost/ring.hpp"

namespace fssboost {

double gain_plain(double GL, double GR, double HL, double HR, double HX, double gamma);
double exact_gain_plain(double GL, double GR, double GX, double HL, double HR, double HX,
                        double gamma);

// Largest k <= ell_f with (N 2^k)^2 (N 2^k + gamma 2^k) < 2^{ell-2}.
// Throws SetupError naming the bound when no k >= 1 fits.
int gain_precision(std::size_t n_samples, double gamma, const RingConfig& cfg);
// Whether a given k satisfies the bound above.
bool gain_precision_fits(std::size_t n_samples, double gamma, int k, const RingConfig& cfg);

// Aggregates at k fraction bits, as ring words.
struct FixedAggregates {
  Word GL = 0;
  Word GR = 0;
  Word HL = 0;
  Word HR = 0;
  Word HX = 0;
};

// Ring mirror of the secure score; gamma_k = round(gamma * 2^k).
Word gain_fixed(const FixedAggregates& a, Word gamma_k, const RingConfig& cfg);

// One entry per candidate.
struct AggregateShares {
  Shares GL, GR, HL, HR, HX;
};

// 3 rounds and 9*ell bits per candidate: round 1 opens the sign gate and two
// squares, round 2 the two weighted products, round 3 the signed product.
Shares gain_online(Session& s, const AggregateShares& agg, Word gamma_k);

}  // namespace fssboost

#endif  // FSSBOOST_GAIN_HPP_
