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

// One party's protocol session and the interactive primitives built on it.
//
// Interactive protocols come in prepare/finish halves around a Round so that
// independent work from different protocols shares one flush:
//
//   Round r(session);
//   auto a = mul_prepare(session, r, x, y);
//   auto b = lt_prepare(session, r, z, omega);
//   r.run();
//   auto xy = mul_finish(session, r, a);
//
// Vectors of Word are this party's additive shares over Z_{2^ell}.

#ifndef FSSBOOST_MPC_HPP_
#define FSSBOOST_MPC_HPP_

#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "fssboost/dealer.hpp"
#include "fssboost/errors.hpp"
#include "fssboost/ring.hpp"
#include "fssboost/sharing.hpp"
#include "fssboost/transport.hpp"

namespace fssboost {

using Shares = std::vector<Word>;

class Session {
 public:
  Session(PartyId party, Endpoint& endpoint, RingConfig ring, Block seed,
          DcfMode dcf_mode = DcfMode::kTree);

  PartyId party() const { return party_; }
  int index() const { return party_.index(); }
  bool is_p1() const { return party_.index() == 1; }
  const RingConfig& ring() const { return ring_; }
  DealerStream& dealer() { return dealer_; }
  Endpoint& endpoint() { return endpoint_; }

  // Sends `out` as this party's frame for the round and returns the peer's.
  std::vector<std::uint8_t> exchange(const BitWriter& out);

  // Public constant c as this party's share: c for party 1, 0 for party 0.
  Word constant(Word c) const { return is_p1() ? ring_.reduce(c) : 0; }

 private:
  PartyId party_;
  Endpoint& endpoint_;
  RingConfig ring_;
  DealerStream dealer_;
};

// Tags every flush issued while alive; nested scopes attribute to the inner tag.
class MeterScope {
 public:
  MeterScope(Session& s, std::string tag) : ep_(s.endpoint()) { ep_.push_tag(std::move(tag)); }
  ~MeterScope() { ep_.pop_tag(); }
  MeterScope(const MeterScope&) = delete;
  MeterScope& operator=(const MeterScope&) = delete;

 private:
  Endpoint& ep_;
};

// A batch of openings exchanged in a single flush.
class Round {
 public:
  explicit Round(Session& s) : s_(s) {}

  // Queues this party's shares for opening mod 2^bits; returns a slot id.
  std::size_t open(Shares mine, int bits);
  // Exchanges every queued slot. A round with no slots sends nothing.
  void run();
  // Reconstructed values of a slot; valid after run().
  const Shares& opened(std::size_t slot) const;
  bool empty() const { return slots_.empty(); }

 private:
  struct Slot {
    Shares mine;
    int bits;
    Shares opened;
  };
  Session& s_;
  std::vector<Slot> slots_;
  bool done_ = false;
};

// Opens a batch in its own round.
Shares open_values(Session& s, std::span<const Word> mine, int bits);

// Beaver product x*y: 1 round, 2*ell bits per element.
struct PendingMul {
  TripleBatch triples;
  std::size_t slot = 0;
};
PendingMul mul_prepare(Session& s, Round& r, std::span<const Word> x, std::span<const Word> y);
Shares mul_finish(Session& s, const Round& r, PendingMul& p);
Shares mul(Session& s, std::span<const Word> x, std::span<const Word> y);

// Square x^2 from a square pair: 1 round, ell bits per element.
struct PendingSquare {
  SquareBatch pairs;
  std::size_t slot = 0;
};
PendingSquare square_prepare(Session& s, Round& r, std::span<const Word> x);
Shares square_finish(Session& s, const Round& r, PendingSquare& p);
Shares square(Session& s, std::span<const Word> x);

// Oblivious select: b ? x : y, computed as y + b*(x - y). b must be 0/1.
PendingMul select_prepare(Session& s, Round& r, std::span<const Word> b, std::span<const Word> x,
                          std::span<const Word> y);
Shares select_finish(Session& s, const Round& r, PendingMul& p, std::span<const Word> y);
Shares select(Session& s, std::span<const Word> b, std::span<const Word> x,
              std::span<const Word> y);

// Product of two shared bits via masked-bit opening: 1 round, 2 bits per
// element. Inputs and output are arithmetic shares of 0/1.
struct PendingBitMul {
  BitProductBatch keys;
  std::size_t slot = 0;
};
PendingBitMul bit_mul_prepare(Session& s, Round& r, std::span<const Word> a,
                              std::span<const Word> b);
Shares bit_mul_finish(Session& s, const Round& r, PendingBitMul& p);
Shares bit_mul(Session& s, std::span<const Word> a, std::span<const Word> b);

// Product of a shared bit and a shared ring value: 1 round, ell + 1 bits per
// element.
struct PendingBitArith {
  BitArithBatch keys;
  std::size_t bit_slot = 0;
  std::size_t word_slot = 0;
};
PendingBitArith bit_arith_prepare(Session& s, Round& r, std::span<const Word> bits,
                                  std::span<const Word> values);
Shares bit_arith_finish(Session& s, const Round& r, PendingBitArith& p);
Shares bit_arith_mul(Session& s, std::span<const Word> bits, std::span<const Word> values);

template <typename R>
struct TwoPartyResult {
  std::array<R, 2> outputs;
  std::array<Meter, 2> meters;
};

namespace internal {
void check_drained(DuplexChannel& channel);
}  // namespace internal

// Runs f(Session&) for both parties on two threads over an in-process
// channel. The first exception raised by either party is rethrown; frames left
// unread after both parties return indicate mismatched round counts and raise
// ProtocolError.
template <typename F>
auto run_two_party(F&& f, Block seed, RingConfig ring, DcfMode dcf_mode = DcfMode::kTree,
                   std::chrono::milliseconds timeout = std::chrono::minutes(10))
    -> TwoPartyResult<std::invoke_result_t<F&, Session&>> {
  using R = std::invoke_result_t<F&, Session&>;
  DuplexChannel channel(timeout);
  TwoPartyResult<R> result;
  std::exception_ptr errors[2];
  std::atomic<int> order{0};
  int error_rank[2] = {0, 0};

  auto body = [&](int b) {
    Endpoint& ep = channel.endpoint(b);
    try {
      Session session(PartyId(b), ep, ring, seed, dcf_mode);
      result.outputs[b] = f(session);
    } catch (...) {
      errors[b] = std::current_exception();
      error_rank[b] = ++order;
    }
    ep.close();
  };
  std::thread peer(body, 1);
  body(0);
  peer.join();

  int first = -1;
  for (int b = 0; b < 2; ++b) {
    if (errors[b] && (first < 0 || error_rank[b] < error_rank[first])) first = b;
  }
  if (first >= 0) std::rethrow_exception(errors[first]);
  internal::check_drained(channel);
  result.meters[0] = channel.endpoint(0).meter();
  result.meters[1] = channel.endpoint(1).meter();
  return result;
}

}  // namespace fssboost

#endif  // FSSBOOST_MPC_HPP_
