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

#include "fssboost/ring.hpp"

#include <cmath>
#include <string>

#include "fssboost/errors.hpp"

namespace fssboost {

void RingConfig::validate() const {
  if (ell < 1 || ell > 64) {
    throw SetupError("ring width must be in [1, 64], got " + std::to_string(ell));
  }
  if (ell_f < 0 || !(ell_f + 2 < ell)) {
    throw SetupError("fraction bits must satisfy 0 < ell_f + 2 < ell (ell=" +
                     std::to_string(ell) + ", ell_f=" + std::to_string(ell_f) + ")");
  }
}

RingElement encode(double x, const RingConfig& cfg) {
  const double limit = std::ldexp(1.0, cfg.ell - cfg.ell_f - 1);
  if (!std::isfinite(x) || !(std::fabs(x) < limit)) {
    throw RangeError("value " + std::to_string(x) + " outside the fixed-point range (+-" +
                     std::to_string(limit) + ")");
  }
  const auto scaled = std::llround(std::ldexp(x, cfg.ell_f));
  return RingElement{cfg.from_signed(scaled)};
}

double decode(RingElement e, const RingConfig& cfg) {
  return std::ldexp(static_cast<double>(cfg.to_signed(e.value)), -cfg.ell_f);
}

RingElement truncate(RingElement e, int bits, const RingConfig& cfg) {
  // >> on a negative int64_t is arithmetic since C++20.
  return RingElement{cfg.from_signed(cfg.to_signed(e.value) >> bits)};
}

Word truncate_share(Word share, int bits, int party, const RingConfig& cfg) {
  share = cfg.reduce(share);
  if (party == 0) return share >> bits;
  return cfg.neg(cfg.neg(share) >> bits);
}

std::vector<Word> encode_all(std::span<const double> xs, const RingConfig& cfg) {
  std::vector<Word> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(encode(x, cfg).value);
  return out;
}

std::vector<double> decode_all(std::span<const Word> ws, const RingConfig& cfg) {
  std::vector<double> out;
  out.reserve(ws.size());
  for (Word w : ws) out.push_back(decode(RingElement{w}, cfg));
  return out;
}

}  // namespace fssboost
