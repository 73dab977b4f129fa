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

#include "fssboost/gain.hpp"

#include <cmath>
#include <string>

#include "fssboost/compare.hpp"
#include "fssboost/errors.hpp"

namespace fssboost {

double gain_plain(double GL, double GR, double HL, double HR, double HX, double gamma) {
  const double g = (HR + gamma) * GL * GL + (HL + gamma) * GR * GR;
  return 2.0 * HL < HX ? g : -g;
}

double exact_gain_plain(double GL, double GR, double GX, double HL, double HR, double HX,
                        double gamma) {
  return 0.5 * (GL * GL / (HL + gamma) + GR * GR / (HR + gamma) - GX * GX / (HX + gamma));
}

bool gain_precision_fits(std::size_t n_samples, double gamma, int k, const RingConfig& cfg) {
  if (k < 1 || k > cfg.ell_f) return false;
  const long double scale = std::ldexp(1.0L, k);
  const long double total = static_cast<long double>(n_samples) * scale;
  const long double bound = total * total * (total + static_cast<long double>(gamma) * scale);
  return bound < std::ldexp(1.0L, cfg.ell - 2);
}

int gain_precision(std::size_t n_samples, double gamma, const RingConfig& cfg) {
  for (int k = cfg.ell_f; k >= 1; --k) {
    if (gain_precision_fits(n_samples, gamma, k, cfg)) return k;
  }
  throw SetupError("overflow budget: need (N*2^k)^2 * (N*2^k + gamma*2^k) < 2^(ell-2) for some "
                   "gain precision k >= 1 (N=" + std::to_string(n_samples) +
                   ", ell=" + std::to_string(cfg.ell) + ")");
}

Word gain_fixed(const FixedAggregates& a, Word gamma_k, const RingConfig& cfg) {
  const Word left = cfg.mul(cfg.add(a.HR, gamma_k), cfg.mul(a.GL, a.GL));
  const Word right = cfg.mul(cfg.add(a.HL, gamma_k), cfg.mul(a.GR, a.GR));
  const Word g = cfg.add(left, right);
  const bool positive = cfg.to_signed(cfg.sub(cfg.add(a.HL, a.HL), a.HX)) < 0;
  return positive ? g : cfg.neg(g);
}

Shares gain_online(Session& s, const AggregateShares& agg, Word gamma_k) {
  const auto& cfg = s.ring();
  const std::size_t n = agg.GL.size();
  if (agg.GR.size() != n || agg.HL.size() != n || agg.HR.size() != n || agg.HX.size() != n) {
    throw UsageError("gain: aggregate vectors differ in length");
  }

  // Round 1: Sign = 1{2 H_L - H_X < 0}, G_L^2, G_R^2.
  Shares diff(n), squares_in(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = cfg.sub(cfg.add(agg.HL[i], agg.HL[i]), agg.HX[i]);
    squares_in[i] = agg.GL[i];
    squares_in[n + i] = agg.GR[i];
  }
  Round r1(s);
  auto sign_gate = lt_prepare(s, r1, diff, Word{0});
  auto sq = square_prepare(s, r1, squares_in);
  r1.run();
  const Shares sign = lt_finish(s, r1, sign_gate);
  const Shares squared = square_finish(s, r1, sq);

  // Round 2: (H_R + gamma) G_L^2 and (H_L + gamma) G_R^2.
  Shares weights(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = cfg.add(agg.HR[i], s.constant(gamma_k));
    weights[n + i] = cfg.add(agg.HL[i], s.constant(gamma_k));
  }
  Round r2(s);
  auto weighted = mul_prepare(s, r2, weights, squared);
  r2.run();
  const Shares terms = mul_finish(s, r2, weighted);

  // Round 3: (2 Sign - 1) G*.
  Shares signed_unit(n), gstar(n);
  for (std::size_t i = 0; i < n; ++i) {
    signed_unit[i] = cfg.sub(cfg.add(sign[i], sign[i]), s.constant(1));
    gstar[i] = cfg.add(terms[i], terms[n + i]);
  }
  Round r3(s);
  auto out = mul_prepare(s, r3, signed_unit, gstar);
  r3.run();
  return mul_finish(s, r3, out);
}

}  // namespace fssboost
