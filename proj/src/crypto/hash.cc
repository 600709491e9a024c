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

#include "porchain/crypto/hash.hpp"

#include <sodium.h>

namespace porchain::crypto {

Hash32 sha256(ByteView data) {
  Hash32 out;
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

Hash32 sha256_concat(std::initializer_list<ByteView> parts) {
  crypto_hash_sha256_state st;
  crypto_hash_sha256_init(&st);
  for (ByteView p : parts) crypto_hash_sha256_update(&st, p.data(), p.size());
  Hash32 out;
  crypto_hash_sha256_final(&st, out.data());
  return out;
}

std::array<uint8_t, 64> sha512(ByteView data) {
  std::array<uint8_t, 64> out;
  crypto_hash_sha512(out.data(), data.data(), data.size());
  return out;
}

Hash32 tagged_hash(std::string_view tag, ByteView data) {
  Bytes prefix;
  put_u32_be(prefix, static_cast<uint32_t>(tag.size()));
  return sha256_concat({prefix, as_bytes(tag), data});
}

}  // namespace porchain::crypto
