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

#include "fssboost/transport.hpp"

#include <algorithm>
#include <cstring>

#include "fssboost/errors.hpp"

namespace fssboost {
namespace {

constexpr std::size_t kHeaderBytes = 4;
const std::string kUntagged = "other";

}  // namespace

Meter& Meter::operator+=(const Meter& other) {
  bits += other.bits;
  bytes += other.bytes;
  header_bytes += other.header_bytes;
  rounds += other.rounds;
  for (const auto& [tag, c] : other.by_tag) {
    auto& mine = by_tag[tag];
    mine.bits += c.bits;
    mine.bytes += c.bytes;
    mine.rounds += c.rounds;
  }
  return *this;
}

Meter Meter::since(const Meter& earlier) const {
  Meter d;
  d.bits = bits - earlier.bits;
  d.bytes = bytes - earlier.bytes;
  d.header_bytes = header_bytes - earlier.header_bytes;
  d.rounds = rounds - earlier.rounds;
  for (const auto& [tag, c] : by_tag) {
    TagCounters prev;
    if (auto it = earlier.by_tag.find(tag); it != earlier.by_tag.end()) prev = it->second;
    if (c.bits == prev.bits && c.bytes == prev.bytes && c.rounds == prev.rounds) continue;
    d.by_tag[tag] = {c.bits - prev.bits, c.bytes - prev.bytes, c.rounds - prev.rounds};
  }
  return d;
}

void BitWriter::put(Word value, int bits) {
  if (bits < 64) value &= (Word{1} << bits) - 1;
  int done = 0;
  while (done < bits) {
    const int offset = static_cast<int>(bits_ % 8);
    if (offset == 0) data_.push_back(0);
    const int take = std::min(8 - offset, bits - done);
    data_.back() |= static_cast<std::uint8_t>(((value >> done) & ((1U << take) - 1)) << offset);
    done += take;
    bits_ += static_cast<std::size_t>(take);
  }
}

void BitWriter::put_words(std::span<const Word> values, int bits) {
  if (bits % 8 == 0 && bits_ % 8 == 0) {
    const int nbytes = bits / 8;
    for (Word v : values) {
      for (int i = 0; i < nbytes; ++i) data_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    bits_ += values.size() * static_cast<std::size_t>(bits);
    return;
  }
  for (Word v : values) put(v, bits);
}

Word BitReader::get(int bits) {
  if (pos_ + static_cast<std::size_t>(bits) > data_.size() * 8) {
    throw ProtocolError("frame shorter than expected by the protocol");
  }
  Word v = 0;
  int done = 0;
  while (done < bits) {
    const int offset = static_cast<int>(pos_ % 8);
    const int take = std::min(8 - offset, bits - done);
    const Word chunk = (data_[pos_ / 8] >> offset) & ((1U << take) - 1);
    v |= chunk << done;
    done += take;
    pos_ += static_cast<std::size_t>(take);
  }
  return v;
}

std::vector<Word> BitReader::get_words(std::size_t count, int bits) {
  std::vector<Word> out;
  out.reserve(count);
  if (bits % 8 == 0 && pos_ % 8 == 0) {
    const std::size_t nbytes = static_cast<std::size_t>(bits / 8);
    if (pos_ / 8 + count * nbytes > data_.size()) {
      throw ProtocolError("frame shorter than expected by the protocol");
    }
    const std::uint8_t* p = data_.data() + pos_ / 8;
    for (std::size_t k = 0; k < count; ++k) {
      Word v = 0;
      for (std::size_t i = 0; i < nbytes; ++i) v |= static_cast<Word>(p[i]) << (8 * i);
      out.push_back(v);
      p += nbytes;
    }
    pos_ += count * nbytes * 8;
    return out;
  }
  for (std::size_t k = 0; k < count; ++k) out.push_back(get(bits));
  return out;
}

const std::string& Endpoint::current_tag() const { return tags_.empty() ? kUntagged : tags_.back(); }

void Endpoint::send(std::span<const std::uint8_t> payload, std::uint64_t payload_bits) {
  outgoing_.insert(outgoing_.end(), payload.begin(), payload.end());
  outgoing_bits_ += payload_bits;
}

void Endpoint::flush() {
  const auto len = static_cast<std::uint32_t>(outgoing_.size());
  std::vector<std::uint8_t> frame(kHeaderBytes + outgoing_.size());
  for (std::size_t i = 0; i < kHeaderBytes; ++i) frame[i] = static_cast<std::uint8_t>(len >> (8 * i));
  std::memcpy(frame.data() + kHeaderBytes, outgoing_.data(), outgoing_.size());

  meter_.bits += outgoing_bits_;
  meter_.bytes += outgoing_.size();
  meter_.header_bytes += kHeaderBytes;
  meter_.rounds += 1;
  auto& tag = meter_.by_tag[current_tag()];
  tag.bits += outgoing_bits_;
  tag.bytes += outgoing_.size();
  tag.rounds += 1;
  outgoing_.clear();
  outgoing_bits_ = 0;

  auto& box = channel_->boxes_[1 - party_];
  {
    std::lock_guard<std::mutex> lock(box.mu);
    box.frames.push_back(std::move(frame));
  }
  box.cv.notify_one();
}

std::vector<std::uint8_t> Endpoint::receive() {
  auto& box = channel_->boxes_[party_];
  std::vector<std::uint8_t> frame;
  {
    std::unique_lock<std::mutex> lock(box.mu);
    const bool ready = box.cv.wait_for(lock, channel_->timeout_,
                                       [&] { return !box.frames.empty() || box.closed; });
    if (box.frames.empty()) {
      const std::string where = " (party " + std::to_string(party_) + ", round " +
                                std::to_string(meter_.rounds) + ")";
      if (!ready) throw ProtocolError("deadlock: no frame from peer within timeout" + where);
      throw ProtocolError("peer finished before this round: mismatched round counts" + where);
    }
    frame = std::move(box.frames.front());
    box.frames.pop_front();
  }
  if (frame.size() < kHeaderBytes) throw ProtocolError("truncated frame header");
  std::uint32_t len = 0;
  for (std::size_t i = 0; i < kHeaderBytes; ++i) len |= static_cast<std::uint32_t>(frame[i]) << (8 * i);
  if (len != frame.size() - kHeaderBytes) throw ProtocolError("frame length mismatch");
  std::vector<std::uint8_t> payload(frame.begin() + kHeaderBytes, frame.end());
  if (recording_) transcript_.push_back(payload);
  return payload;
}

void Endpoint::close() {
  auto& box = channel_->boxes_[1 - party_];
  {
    std::lock_guard<std::mutex> lock(box.mu);
    box.closed = true;
  }
  box.cv.notify_all();
}

DuplexChannel::DuplexChannel(std::chrono::milliseconds timeout)
    : timeout_(timeout), ep0_(this, 0), ep1_(this, 1) {}

std::size_t DuplexChannel::pending(int party) {
  auto& box = boxes_[1 - party];
  std::lock_guard<std::mutex> lock(box.mu);
  return box.frames.size();
}

NetworkProfile NetworkProfile::by_name(const std::string& name) {
  if (name == "lan") return lan();
  if (name == "wan") return wan();
  throw UsageError("unknown network profile '" + name + "' (expected lan or wan)");
}

double estimate_time(std::uint64_t rounds, std::uint64_t bytes, const NetworkProfile& profile) {
  return static_cast<double>(rounds) * profile.rtt_ms / 1000.0 +
         static_cast<double>(bytes) * 8.0 / profile.bandwidth_bps;
}

double estimate_time(const Meter& meter, const NetworkProfile& profile) {
  return estimate_time(meter.rounds, meter.bytes, profile);
}

}  // namespace fssboost
