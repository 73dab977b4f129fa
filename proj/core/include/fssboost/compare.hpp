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

// Masked signed comparison from a DCF, and the argmax tournament built on it.
//
// For shared x and public omega the parties open m = x + alpha - omega and
// each evaluates its key locally:
//
//   1{x < omega} = msb(m) + Eval(m) - Eval(m + 2^{ell-1}),
//
// where Eval shares 1{. < alpha} (unsigned). The identity holds whenever the
// signed difference x - omega lies in [-2^{ell-1}, 2^{ell-1}).

#ifndef FSSBOOST_COMPARE_HPP_
#define FSSBOOST_COMPARE_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fssboost/dealer.hpp"
#include "fssboost/mpc.hpp"

namespace fssboost {

// Both halves of one gate with an explicit mask (tests and self-checks).
std::array<LtGateKey, 2> lt_gate_keys(Word alpha, const RingConfig& cfg, CtrPrg& rng,
                                      DcfMode mode = DcfMode::kTree);

// Local half of the gate: this party's share of 1{x < omega} from the opened m.
Word lt_eval_local(int party, const LtGateKey& key, Word m, const RingConfig& cfg);

// This party's share of m = x + alpha - omega.
inline Word lt_mask(Word x, const LtGateKey& key, Word omega_share, const RingConfig& cfg) {
  return cfg.sub(cfg.add(x, key.alpha), omega_share);
}

struct PendingLt {
  LtGateBatch keys;
  std::size_t slot = 0;
};

// Queues openings of x_i + alpha_i - omega_i (omega public, one per input).
PendingLt lt_prepare(Session& s, Round& r, std::span<const Word> x,
                     std::span<const Word> omega);
// Same with one public threshold for every input.
PendingLt lt_prepare(Session& s, Round& r, std::span<const Word> x, Word omega);
Shares lt_finish(Session& s, const Round& r, PendingLt& p);

// Shares of 1{signed(x_i) < signed(omega)}: 1 round, ell bits per gate.
Shares lt_gate(Session& s, std::span<const Word> x, Word omega);
// Shares of 1{signed(x_i) >= signed(omega)}: local complement of lt_gate.
Shares ge_bit(Session& s, std::span<const Word> x, Word omega);
// In-place complement 1 - b of shared bits.
void complement_bits(Session& s, Shares& bits);

// One argmax instance: shared values with two shared tags each.
struct Candidates {
  Shares value;
  Shares tag0;
  Shares tag1;
};

struct Winner {
  Word value = 0;
  Word tag0 = 0;
  Word tag1 = 0;
};

// Tournament argmax over every group at once. Adjacent pairs are compared
// with lt(a - b, 0) and the right operand wins only when strictly larger, so
// among equal maxima the lowest index wins. 2 rounds per tournament level.
// Throws UsageError on an empty group.
std::vector<Winner> argmax(Session& s, std::span<const Candidates> groups);

}  // namespace fssboost

#endif  // FSSBOOST_COMPARE_HPP_
