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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace porchain {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;
using Hash32 = std::array<uint8_t, 32>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

std::string to_hex(ByteView data);
// Throws FormatError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

void put_u32_be(Bytes& out, uint32_t v);
void put_u64_be(Bytes& out, uint64_t v);
uint32_t get_u32_be(ByteView in);
uint64_t get_u64_be(ByteView in);
Bytes u64_be(uint64_t v);

// Canonical encoder: every field is a 4-byte big-endian length followed by
// the raw bytes. Fixed-width integers are written as fields too so that the
// byte stream is self-delimiting everywhere.
class ByteWriter {
 public:
  ByteWriter& field(ByteView data);
  ByteWriter& field(std::string_view s) { return field(as_bytes(s)); }
  ByteWriter& u8(uint8_t v);
  ByteWriter& u32(uint32_t v);
  ByteWriter& u64(uint64_t v);
  // Raw bytes without a length prefix (magic numbers, version bytes).
  ByteWriter& raw(ByteView data);

  const Bytes& bytes() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }

 private:
  Bytes buf_;
};

// Decoder matching ByteWriter. Every accessor throws FormatError on
// truncation or a length that does not match the expected width.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  ByteView field();
  std::string str();
  uint8_t u8();
  uint32_t u32();
  uint64_t u64();
  ByteView raw(size_t n);
  // Field that must be exactly `n` bytes long.
  ByteView fixed(size_t n);

  bool done() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }
  // Throws FormatError if trailing bytes are present.
  void expect_done() const;

 private:
  ByteView data_;
  size_t pos_ = 0;
};

}  // namespace porchain
