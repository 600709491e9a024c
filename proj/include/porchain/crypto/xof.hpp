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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "porchain/common/bytes.hpp"
#include "porchain/crypto/scalar.hpp"

namespace porchain::crypto {

// Deterministic expandable-output stream. The stream is ChaCha20 keyed with
// SHA-256(lp(domain_tag) || seed), so its bytes are a pure function of
// (seed, domain_tag) on every platform.
class XofSampler {
 public:
  XofSampler(const Hash32& seed, std::string_view domain_tag);

  // Fresh sampler seeded from the OS entropy source.
  static XofSampler from_entropy(std::string_view domain_tag);

  void fill(uint8_t* out, size_t n);
  Bytes bytes(size_t n);
  Hash32 bytes32();
  uint64_t next_u64();
  // Uniform in [0, bound) by rejection; bound > 0.
  uint64_t uniform(uint64_t bound);
  // Uniform scalar in [0, p) by rejection on 255-bit candidates.
  Scalar scalar();

  // Independent child stream: seed = SHA-256(lp(tag) || parent bytes32()).
  XofSampler fork(std::string_view domain_tag);

  const Hash32& seed() const { return seed_; }
  const std::string& domain_tag() const { return tag_; }
  uint64_t counter() const { return produced_; }

 private:
  void refill();

  Hash32 seed_;
  std::string tag_;
  Hash32 key_;
  uint32_t block_ = 0;
  uint8_t buf_[64];
  size_t buf_pos_ = 64;
  uint64_t produced_ = 0;
};

std::vector<Scalar> sample_scalars(XofSampler& sampler, size_t count);

// `l` distinct indices from [1, n], drawn by rejection from the stream and
// returned in ascending order. Throws ParameterError unless 1 <= l <= n.
std::vector<uint64_t> sample_distinct_indices(XofSampler& sampler, uint64_t n, uint64_t l);

}  // namespace porchain::crypto
