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

#include "fssboost/config.hpp"

#include <cmath>
#include <string>

#include "fssboost/errors.hpp"
#include "fssboost/gain.hpp"

namespace fssboost {
namespace {

bool below(long double v, int log2_bound) { return v < std::ldexp(1.0L, log2_bound); }

}  // namespace

void TrainConfig::validate() const {
  ring.validate();
  if (trees < 1) throw UsageError("trees must be >= 1");
  if (depth < 0 || depth > 16) throw UsageError("depth must lie in [0, 16]");
  if (buckets < 2) throw UsageError("buckets must be >= 2");
  if (segments < 1) throw UsageError("segments must be >= 1");
  if (!(gamma > 0.0)) throw UsageError("gamma must be > 0");
  if (!(eta > 0.0)) throw UsageError("eta must be > 0");
  if (gain_bits < 0 || gain_bits > ring.ell_f) {
    throw UsageError("gain bits must lie in [0, ell_f] (0 = automatic)");
  }
}

int TrainConfig::resolve_gain_bits(std::size_t n_samples) const {
  validate();
  if (n_samples == 0) throw SetupError("no training samples");
  int k = gain_bits;
  if (k == 0) {
    k = gain_precision(n_samples, gamma, ring);
  } else if (!gain_precision_fits(n_samples, gamma, k, ring)) {
    throw SetupError("overflow budget: gain precision k=" + std::to_string(k) +
                     " violates (N*2^k)^2 * (N*2^k + gamma*2^k) < 2^(ell-2) for N=" +
                     std::to_string(n_samples));
  }

  const long double one = std::ldexp(1.0L, ring.ell_f);
  const long double n = segments;
  // Leaf gates compare -n G - (10 i - 5 n)(H + gamma) with |G| <= N, H <= N.
  const long double leaf = n * one * (6.0L * n_samples + 5.0L * gamma + 1.0L);
  if (!below(leaf, ring.ell - 2)) {
    throw SetupError("overflow budget: n * 2^ell_f * (6N + 5 gamma + 1) must stay below 2^(ell-2)");
  }
  // Sigmoid gates compare n * margin with |margin| <= 5 * eta * T.
  const long double margin = n * one * (5.0L * eta * trees + 5.0L);
  if (!below(margin, ring.ell - 2)) {
    throw SetupError("overflow budget: n * 2^ell_f * (5 eta T + 5) must stay below 2^(ell-2)");
  }
  if (!below(std::ldexp(5.0L * eta, ring.ell_f), ring.ell - 1)) {
    throw SetupError("overflow budget: leaf weights 5 * eta do not fit the fixed-point range");
  }
  return k;
}

TrainingTables make_tables(const TrainConfig& cfg, int gain_bits) {
  TrainingTables t;
  t.gain_bits = gain_bits;
  t.sigmoid = SigmoidTable::build(cfg.segments, cfg.ring);
  const int shift = cfg.ring.ell_f - gain_bits;
  t.p_coarse = SigmoidTable::coarse(t.sigmoid.p, shift);
  t.h_coarse = SigmoidTable::coarse(t.sigmoid.h, shift);
  t.leaf = LeafWeightTable::build(cfg.segments, cfg.eta, cfg.ring);
  t.gamma_full = encode(cfg.gamma, cfg.ring).value;
  t.gamma_coarse = static_cast<Word>(std::llround(std::ldexp(cfg.gamma, gain_bits)));
  t.label_full = cfg.ring.one();
  t.label_coarse = Word{1} << gain_bits;
  return t;
}

}  // namespace fssboost
