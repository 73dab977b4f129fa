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

// Two-party execution fabric.
//
// A round is one flush from each side. Each flush emits one frame:
//
//   u32 little-endian payload length | payload bytes
//
// Sub-byte payloads are bit-packed LSB-first and padded to a byte boundary.
// The meter records the pre-padding bit count and the padded payload bytes
// separately; the 4-byte frame header is counted in header_bytes.

#ifndef FSSBOOST_TRANSPORT_HPP_
#define FSSBOOST_TRANSPORT_HPP_

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "fssboost/ring.hpp"

namespace fssboost {

struct TagCounters {
  std::uint64_t bits = 0;
  std::uint64_t bytes = 0;
  std::uint64_t rounds = 0;
};

struct Meter {
  std::uint64_t bits = 0;          // payload bits before padding
  std::uint64_t bytes = 0;         // payload bytes after padding
  std::uint64_t header_bytes = 0;  // frame headers
  std::uint64_t rounds = 0;        // flushes
  std::map<std::string, TagCounters> by_tag;

  std::uint64_t wire_bytes() const { return bytes + header_bytes; }

  Meter& operator+=(const Meter& other);
  // Counters accumulated since `earlier` (a snapshot of this meter).
  Meter since(const Meter& earlier) const;
};

class BitWriter {
 public:
  void put(Word value, int bits);
  void put_words(std::span<const Word> values, int bits);
  std::size_t bit_count() const { return bits_; }
  const std::vector<std::uint8_t>& bytes() const { return data_; }
  std::vector<std::uint8_t> release() { return std::move(data_); }

 private:
  std::vector<std::uint8_t> data_;
  std::size_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}
  // Throws ProtocolError when reading past the payload.
  Word get(int bits);
  std::vector<Word> get_words(std::size_t count, int bits);

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

// In-process duplex channel: two mailboxes, one per direction.
class DuplexChannel;

class Endpoint {
 public:
  // Appends to the outgoing frame of the current round.
  void send(std::span<const std::uint8_t> payload, std::uint64_t payload_bits);
  // Emits the outgoing frame; counts one round.
  void flush();
  // Blocks for the peer's next frame. Throws ProtocolError if the peer has
  // finished or the wait exceeds the channel timeout.
  std::vector<std::uint8_t> receive();

  // Marks this side finished; a peer blocked in receive() fails fast.
  void close();

  Meter& meter() { return meter_; }
  const Meter& meter() const { return meter_; }
  std::uint64_t round() const { return meter_.rounds; }

  void push_tag(std::string tag) { tags_.push_back(std::move(tag)); }
  void pop_tag() { tags_.pop_back(); }

  // When enabled, every received frame payload is kept for transcript checks.
  void record_transcript(bool on) { recording_ = on; }
  const std::vector<std::vector<std::uint8_t>>& transcript() const { return transcript_; }

  int party() const { return party_; }

 private:
  friend class DuplexChannel;
  Endpoint(DuplexChannel* channel, int party) : channel_(channel), party_(party) {}

  const std::string& current_tag() const;

  DuplexChannel* channel_;
  int party_;
  std::vector<std::uint8_t> outgoing_;
  std::uint64_t outgoing_bits_ = 0;
  Meter meter_;
  std::vector<std::string> tags_;
  bool recording_ = false;
  std::vector<std::vector<std::uint8_t>> transcript_;
};

class DuplexChannel {
 public:
  explicit DuplexChannel(std::chrono::milliseconds timeout = std::chrono::minutes(10));
  DuplexChannel(const DuplexChannel&) = delete;
  DuplexChannel& operator=(const DuplexChannel&) = delete;

  Endpoint& endpoint(int party) { return party == 0 ? ep0_ : ep1_; }

  // Frames sent by `party` and not yet received by its peer.
  std::size_t pending(int party);

 private:
  friend class Endpoint;
  struct Mailbox {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<std::vector<std::uint8_t>> frames;
    bool closed = false;
  };

  Mailbox boxes_[2];  // boxes_[b] holds frames addressed to party b
  std::chrono::milliseconds timeout_;
  Endpoint ep0_;
  Endpoint ep1_;
};

struct NetworkProfile {
  std::string name;
  double rtt_ms = 0.0;
  double bandwidth_bps = 0.0;

  static NetworkProfile lan() { return {"lan", 0.2, 1e9}; }
  static NetworkProfile wan() { return {"wan", 40.0, 100e6}; }
  // Throws UsageError for names other than "lan"/"wan".
  static NetworkProfile by_name(const std::string& name);
};

// rounds * RTT + bytes * 8 / bandwidth, in seconds. Analytic; never sleeps.
double estimate_time(const Meter& meter, const NetworkProfile& profile);
double estimate_time(std::uint64_t rounds, std::uint64_t bytes, const NetworkProfile& profile);

}  // namespace fssboost

#endif  // FSSBOOST_TRANSPORT_HPP_
