// Copyright 2026 The porchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "porchain/crypto/xof.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <limits>
#include <set>

#include "porchain/common/error.hpp"
#include "porchain/crypto/hash.hpp"

namespace porchain::crypto {

XofSampler::XofSampler(const Hash32& seed, std::string_view domain_tag)
    : seed_(seed), tag_(domain_tag) {
  PORCHAIN_ENFORCE(!tag_.empty(), ParameterError, "sampler requires a domain tag");
  key_ = tagged_hash(tag_, seed_);
}

XofSampler XofSampler::from_entropy(std::string_view domain_tag) {
  PORCHAIN_ENFORCE(sodium_init() >= 0, Error, "libsodium initialisation failed");
  Hash32 seed;
  randombytes_buf(seed.data(), seed.size());
  return XofSampler(seed, domain_tag);
}

void XofSampler::refill() {
  static const uint8_t kZeros[64] = {};
  static const uint8_t kNonce[crypto_stream_chacha20_ietf_NONCEBYTES] = {};
  PORCHAIN_ENFORCE(block_ != std::numeric_limits<uint32_t>::max(), Error,
                   "sampler stream exhausted");
  crypto_stream_chacha20_ietf_xor_ic(buf_, kZeros, sizeof(buf_), kNonce, block_++, key_.data());
  buf_pos_ = 0;
}

void XofSampler::fill(uint8_t* out, size_t n) {
  while (n > 0) {
    if (buf_pos_ == sizeof(buf_)) refill();
    size_t take = std::min(n, sizeof(buf_) - buf_pos_);
    std::memcpy(out, buf_ + buf_pos_, take);
    buf_pos_ += take;
    out += take;
    n -= take;
    produced_ += take;
  }
}

Bytes XofSampler::bytes(size_t n) {
  Bytes out(n);
  fill(out.data(), n);
  return out;
}

Hash32 XofSampler::bytes32() {
  Hash32 out;
  fill(out.data(), out.size());
  return out;
}

uint64_t XofSampler::next_u64() {
  uint8_t b[8];
  fill(b, sizeof(b));
  return get_u64_be(ByteView(b, sizeof(b)));
}

uint64_t XofSampler::uniform(uint64_t bound) {
  PORCHAIN_ENFORCE(bound > 0, ParameterError, "uniform bound must be positive");
  // Largest multiple of bound that fits; values at or above it are rejected.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
  for (;;) {
    uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

Scalar XofSampler::scalar() {
  for (;;) {
    std::array<uint8_t, Scalar::kEncodedSize> candidate;
    fill(candidate.data(), candidate.size());
    candidate[0] &= 0x7f;  // 255-bit candidate; p > 2^254 so acceptance > 1/2
    if (auto s = Scalar::try_from_canonical(candidate)) return *s;
  }
}

XofSampler XofSampler::fork(std::string_view domain_tag) {
  return XofSampler(tagged_hash(domain_tag, bytes32()), domain_tag);
}

std::vector<Scalar> sample_scalars(XofSampler& sampler, size_t count) {
  std::vector<Scalar> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(sampler.scalar());
  return out;
}

std::vector<uint64_t> sample_distinct_indices(XofSampler& sampler, uint64_t n, uint64_t l) {
  PORCHAIN_ENFORCE(l >= 1 && l <= n, ParameterError,
                   "index subset size must satisfy 1 <= l <= n");
  std::set<uint64_t> chosen;
  while (chosen.size() < l) chosen.insert(sampler.uniform(n) + 1);
  return {chosen.begin(), chosen.end()};
}

}  // namespace porchain::crypto
