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

#include "fssboost/prg.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>
#include <vector>

namespace fssboost {
namespace {

constexpr std::size_t kBufferBytes = 4096;

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

void to_bytes(Block b, unsigned char* out) {
  std::memcpy(out, &b.lo, 8);
  std::memcpy(out + 8, &b.hi, 8);
}

Block from_bytes(const unsigned char* in) {
  Block b;
  std::memcpy(&b.lo, in, 8);
  std::memcpy(&b.hi, in + 8, 8);
  return b;
}

CipherCtx make_ctx(const EVP_CIPHER* cipher, Block key, const unsigned char* iv) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw std::runtime_error("EVP_CIPHER_CTX_new failed");
  unsigned char k[16];
  to_bytes(key, k);
  if (EVP_EncryptInit_ex(ctx.get(), cipher, nullptr, k, iv) != 1) {
    throw std::runtime_error("EVP_EncryptInit_ex failed");
  }
  EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
  return ctx;
}

// Fixed public key for the MMO construction.
constexpr Block kMmoKey{0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL};

EVP_CIPHER_CTX* mmo_ctx() {
  thread_local CipherCtx ctx = make_ctx(EVP_aes_128_ecb(), kMmoKey, nullptr);
  return ctx.get();
}

}  // namespace

struct CtrPrg::Impl {
  CipherCtx ctx;
  std::vector<unsigned char> zeros = std::vector<unsigned char>(kBufferBytes, 0);
  std::vector<unsigned char> buffer = std::vector<unsigned char>(kBufferBytes, 0);
  std::size_t pos = kBufferBytes;
  std::uint64_t bit_cache = 0;
  int bits_left = 0;
};

CtrPrg::CtrPrg(Block key, Block nonce) : impl_(std::make_unique<Impl>()) {
  unsigned char iv[16];
  to_bytes(nonce, iv);
  impl_->ctx = make_ctx(EVP_aes_128_ctr(), key, iv);
}

CtrPrg::~CtrPrg() = default;
CtrPrg::CtrPrg(CtrPrg&&) noexcept = default;
CtrPrg& CtrPrg::operator=(CtrPrg&&) noexcept = default;

void CtrPrg::refill() {
  int out_len = 0;
  if (EVP_EncryptUpdate(impl_->ctx.get(), impl_->buffer.data(), &out_len, impl_->zeros.data(),
                        static_cast<int>(kBufferBytes)) != 1 ||
      out_len != static_cast<int>(kBufferBytes)) {
    throw std::runtime_error("AES-CTR keystream generation failed");
  }
  impl_->pos = 0;
}

std::uint64_t CtrPrg::next_u64() {
  if (impl_->pos + 8 > kBufferBytes) refill();
  std::uint64_t v;
  std::memcpy(&v, impl_->buffer.data() + impl_->pos, 8);
  impl_->pos += 8;
  return v;
}

Block CtrPrg::next_block() {
  Block b;
  b.lo = next_u64();
  b.hi = next_u64();
  return b;
}

int CtrPrg::next_bit() {
  if (impl_->bits_left == 0) {
    impl_->bit_cache = next_u64();
    impl_->bits_left = 64;
  }
  const int bit = static_cast<int>(impl_->bit_cache & 1U);
  impl_->bit_cache >>= 1;
  --impl_->bits_left;
  return bit;
}

Word CtrPrg::next_bits(int bits) {
  if (bits <= 0) return 0;
  const Word v = next_u64();
  return bits >= 64 ? v : (v & ((Word{1} << bits) - 1));
}

std::uint64_t CtrPrg::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

std::array<Block, 4> expand_seed(Block seed) {
  unsigned char in[64];
  unsigned char out[64];
  std::array<Block, 4> tweaked;
  for (std::uint64_t j = 0; j < 4; ++j) {
    tweaked[j] = seed ^ Block{0, j << 56};
    to_bytes(tweaked[j], in + 16 * j);
  }
  int out_len = 0;
  if (EVP_EncryptUpdate(mmo_ctx(), out, &out_len, in, 64) != 1 || out_len != 64) {
    throw std::runtime_error("AES-ECB expansion failed");
  }
  std::array<Block, 4> result;
  for (int j = 0; j < 4; ++j) result[j] = from_bytes(out + 16 * j) ^ tweaked[j];
  return result;
}

}  // namespace fssboost
