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

#include "fssboost/mpc.hpp"

#include <tuple>

namespace fssboost {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw UsageError(std::string(what) + ": operand lengths differ (" + std::to_string(a) +
                     " vs " + std::to_string(b) + ")");
  }
}

Word width_mask(int bits) { return bits >= 64 ? ~Word{0} : ((Word{1} << bits) - 1); }

}  // namespace

Session::Session(PartyId party, Endpoint& endpoint, RingConfig ring, Block seed, DcfMode dcf_mode)
    : party_(party), endpoint_(endpoint), ring_(ring), dealer_(seed, party, ring, dcf_mode) {}

std::vector<std::uint8_t> Session::exchange(const BitWriter& out) {
  endpoint_.send(out.bytes(), out.bit_count());
  endpoint_.flush();
  return endpoint_.receive();
}

std::size_t Round::open(Shares mine, int bits) {
  if (done_) throw ProtocolError("round already exchanged");
  const Word m = width_mask(bits);
  for (auto& w : mine) w &= m;
  slots_.push_back(Slot{std::move(mine), bits, {}});
  return slots_.size() - 1;
}

void Round::run() {
  if (done_) throw ProtocolError("round already exchanged");
  done_ = true;
  if (slots_.empty()) return;
  BitWriter out;
  for (const auto& slot : slots_) out.put_words(slot.mine, slot.bits);
  const auto frame = s_.exchange(out);
  BitReader in(frame);
  for (auto& slot : slots_) {
    const Word m = width_mask(slot.bits);
    slot.opened = in.get_words(slot.mine.size(), slot.bits);
    for (std::size_t i = 0; i < slot.opened.size(); ++i) {
      slot.opened[i] = (slot.opened[i] + slot.mine[i]) & m;
    }
  }
}

const Shares& Round::opened(std::size_t slot) const {
  if (!done_) throw ProtocolError("round not yet exchanged");
  return slots_.at(slot).opened;
}

Shares open_values(Session& s, std::span<const Word> mine, int bits) {
  Round r(s);
  const auto slot = r.open(Shares(mine.begin(), mine.end()), bits);
  r.run();
  return r.opened(slot);
}

PendingMul mul_prepare(Session& s, Round& r, std::span<const Word> x, std::span<const Word> y) {
  require_same_size(x.size(), y.size(), "mul");
  const auto& cfg = s.ring();
  const std::size_t n = x.size();
  PendingMul p{s.dealer().triples(n), 0};
  const auto t = p.triples.peek();
  Shares masked(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::tie(masked[2 * i], masked[2 * i + 1]) = beaver_mask(x[i], y[i], t[i], cfg);
  }
  p.slot = r.open(std::move(masked), cfg.ell);
  return p;
}

Shares mul_finish(Session& s, const Round& r, PendingMul& p) {
  const auto& cfg = s.ring();
  const auto& de = r.opened(p.slot);
  const std::size_t n = de.size() / 2;
  const auto t = p.triples.take(n, "mul");
  Shares z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = beaver_combine(s.index(), de[2 * i], de[2 * i + 1], t[i], cfg);
  }
  return z;
}

Shares mul(Session& s, std::span<const Word> x, std::span<const Word> y) {
  Round r(s);
  auto p = mul_prepare(s, r, x, y);
  r.run();
  return mul_finish(s, r, p);
}

PendingSquare square_prepare(Session& s, Round& r, std::span<const Word> x) {
  const auto& cfg = s.ring();
  PendingSquare p{s.dealer().squares(x.size()), 0};
  const auto sq = p.pairs.peek();
  Shares masked(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) masked[i] = square_mask(x[i], sq[i], cfg);
  p.slot = r.open(std::move(masked), cfg.ell);
  return p;
}

Shares square_finish(Session& s, const Round& r, PendingSquare& p) {
  const auto& cfg = s.ring();
  const auto& d = r.opened(p.slot);
  const auto sq = p.pairs.take(d.size(), "square");
  Shares z(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) z[i] = square_combine(s.index(), d[i], sq[i], cfg);
  return z;
}

Shares square(Session& s, std::span<const Word> x) {
  Round r(s);
  auto p = square_prepare(s, r, x);
  r.run();
  return square_finish(s, r, p);
}

PendingMul select_prepare(Session& s, Round& r, std::span<const Word> b, std::span<const Word> x,
                          std::span<const Word> y) {
  require_same_size(x.size(), y.size(), "select");
  const auto& cfg = s.ring();
  Shares diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = cfg.sub(x[i], y[i]);
  return mul_prepare(s, r, b, diff);
}

Shares select_finish(Session& s, const Round& r, PendingMul& p, std::span<const Word> y) {
  auto z = mul_finish(s, r, p);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = s.ring().add(z[i], y[i]);
  return z;
}

Shares select(Session& s, std::span<const Word> b, std::span<const Word> x,
              std::span<const Word> y) {
  Round r(s);
  auto p = select_prepare(s, r, b, x, y);
  r.run();
  return select_finish(s, r, p, y);
}

PendingBitMul bit_mul_prepare(Session& s, Round& r, std::span<const Word> a,
                              std::span<const Word> b) {
  require_same_size(a.size(), b.size(), "bit_mul");
  const std::size_t n = a.size();
  PendingBitMul p{s.dealer().bit_products(n), 0};
  const auto k = p.keys.peek();
  // Low bit of (a + r_a) per party; the XOR of both is a ^ r_a.
  Shares masked(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    masked[2 * i] = (a[i] + k[i].ra) & 1U;
    masked[2 * i + 1] = (b[i] + k[i].rb) & 1U;
  }
  p.slot = r.open(std::move(masked), 1);
  return p;
}

Shares bit_mul_finish(Session& s, const Round& r, PendingBitMul& p) {
  const auto& cfg = s.ring();
  const auto& hats = r.opened(p.slot);
  const std::size_t n = hats.size() / 2;
  const auto k = p.keys.take(n, "bit_mul");
  Shares z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word ah = hats[2 * i];
    const Word bh = hats[2 * i + 1];
    const Word ca = cfg.sub(1, 2 * ah);  // 1 - 2*a_hat
    const Word cb = cfg.sub(1, 2 * bh);
    Word v = cfg.add(cfg.mul(ah * cb, k[i].rb), cfg.mul(bh * ca, k[i].ra));
    v = cfg.add(v, cfg.mul(cfg.mul(ca, cb), k[i].rab));
    if (s.is_p1()) v = cfg.add(v, ah & bh);
    z[i] = v;
  }
  return z;
}

Shares bit_mul(Session& s, std::span<const Word> a, std::span<const Word> b) {
  Round r(s);
  auto p = bit_mul_prepare(s, r, a, b);
  r.run();
  return bit_mul_finish(s, r, p);
}

PendingBitArith bit_arith_prepare(Session& s, Round& r, std::span<const Word> bits,
                                  std::span<const Word> values) {
  require_same_size(bits.size(), values.size(), "bit_arith_mul");
  const auto& cfg = s.ring();
  const std::size_t n = bits.size();
  PendingBitArith p{s.dealer().bit_arith(n), 0, 0};
  const auto k = p.keys.peek();
  Shares sh(n), wh(n);
  for (std::size_t i = 0; i < n; ++i) {
    sh[i] = (bits[i] + k[i].rs) & 1U;
    wh[i] = cfg.add(values[i], k[i].rw);
  }
  p.bit_slot = r.open(std::move(sh), 1);
  p.word_slot = r.open(std::move(wh), cfg.ell);
  return p;
}

Shares bit_arith_finish(Session& s, const Round& r, PendingBitArith& p) {
  const auto& cfg = s.ring();
  const auto& sh = r.opened(p.bit_slot);
  const auto& wh = r.opened(p.word_slot);
  const auto k = p.keys.take(sh.size(), "bit_arith_mul");
  Shares z(sh.size());
  for (std::size_t i = 0; i < sh.size(); ++i) {
    // s*w = s_hat*w_hat - s_hat*r_w + (1 - 2 s_hat)(w_hat*r_s - u)
    const Word c = cfg.sub(1, 2 * sh[i]);
    Word v = cfg.mul(c, cfg.sub(cfg.mul(wh[i], k[i].rs), k[i].u));
    if (sh[i]) v = cfg.sub(v, k[i].rw);
    if (s.is_p1() && sh[i]) v = cfg.add(v, wh[i]);
    z[i] = v;
  }
  return z;
}

Shares bit_arith_mul(Session& s, std::span<const Word> bits, std::span<const Word> values) {
  Round r(s);
  auto p = bit_arith_prepare(s, r, bits, values);
  r.run();
  return bit_arith_finish(s, r, p);
}

namespace internal {

void check_drained(DuplexChannel& channel) {
  for (int b = 0; b < 2; ++b) {
    if (const auto left = channel.pending(b); left != 0) {
      throw ProtocolError("party " + std::to_string(b) + " sent " + std::to_string(left) +
                          " frame(s) its peer never received: mismatched round counts");
    }
  }
}

}  // namespace internal
}  // namespace fssboost
