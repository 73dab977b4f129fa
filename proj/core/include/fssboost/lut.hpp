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

// Piecewise-constant lookup tables over n equal segments of [-5, 5].
//
// Segment i (1 <= i <= n) starts at w_i = -5 + 10 i / n. A lookup computes the
// bits beta_i = 1{t >= w_i} with one comparison gate each and returns
//
//   table[0] + sum_i beta_i * (table[i] - table[i-1]) = table[j],
//
// j = number of segments started at or below t. All comparisons are done on
// integers scaled by n, so n*w_i = 10 i - 5 n is exact:
//
//   sigmoid:     n * x          >= (10 i - 5 n) * 2^{ell_f}
//   leaf weight: -n * G - (10 i - 5 n) * (H + gamma) >= 0
//
// and the secure result matches the plaintext fixed-point mirror bit for bit.

#ifndef FSSBOOST_LUT_HPP_
#define FSSBOOST_LUT_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "fssboost/mpc.hpp"
#include "fssboost/compare.hpp"
#include "fssboost/ring.hpp"

namespace fssboost {

// Left endpoint of segment i: -5 + 10 i / n.
double segment_point(int i, int n);

struct SigmoidTable {
  int n = 0;
  std::vector<Word> p;  // round(sigmoid(w_i) * 2^{ell_f})
  std::vector<Word> h;  // floor(p_i * (2^{ell_f} - p_i) / 2^{ell_f})

  // Throws UsageError unless n >= 1.
  static SigmoidTable build(int n, const RingConfig& cfg);
  // Entries shifted right by `shift` bits (reduced-precision copies).
  static std::vector<Word> coarse(std::span<const Word> entries, int shift);
};

struct LeafWeightTable {
  int n = 0;
  std::vector<Word> w;  // encode(eta * w_i)

  static LeafWeightTable build(int n, double eta, const RingConfig& cfg);
};

// Plaintext references.
double sigmoid(double x);
int sigmoid_segment_plain(double x, int n);
double sigmoid_plain(double x, int n);
int leafweight_segment_plain(double G, double H, double gamma, int n);
double leafweight_plain(double G, double H, double gamma, int n);

// Fixed-point mirrors (integer comparisons on ring values).
int sigmoid_segment_fixed(Word x, int n, const RingConfig& cfg);
Word sigmoid_fixed(Word x, const SigmoidTable& table, const RingConfig& cfg);
int leafweight_segment_fixed(Word G, Word H, Word gamma, int n, const RingConfig& cfg);
Word leafweight_fixed(Word G, Word H, Word gamma, const LeafWeightTable& table,
                      const RingConfig& cfg);

// Shares of table[j] from the segment bits; betas are laid out element-major,
// n bits per element. Local.
Shares lut_select(const Session& s, std::span<const Word> betas, int n,
                  std::span<const Word> table);

// Segment gates for the sigmoid input. n gates per element, ell bits each.
PendingLt sigmoid_segments_prepare(Session& s, Round& r, std::span<const Word> x, int n);
// Segment gates for the leaf weight of (G, H); gamma is the encoded public
// regularizer.
PendingLt leaf_segments_prepare(Session& s, Round& r, std::span<const Word> G,
                                std::span<const Word> H, Word gamma, int n);
// Converts opened gates to beta_i = 1{. >= w_i} shares.
Shares segments_finish(Session& s, const Round& r, PendingLt& p);

// One round, n*ell bits per element.
Shares sigmoid_online(Session& s, std::span<const Word> x, const SigmoidTable& table);
Shares leafweight_online(Session& s, std::span<const Word> G, std::span<const Word> H,
                         Word gamma, const LeafWeightTable& table);

}  // namespace fssboost

#endif  // FSSBOOST_LUT_HPP_
