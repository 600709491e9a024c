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

#include "porchain/common/bytes.hpp"

#include <limits>

#include "porchain/common/error.hpp"

namespace porchain {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  PORCHAIN_ENFORCE(hex.size() % 2 == 0, FormatError, "hex string has odd length");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    PORCHAIN_ENFORCE(hi >= 0 && lo >= 0, FormatError, "invalid hex character");
    out[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return out;
}

void put_u32_be(Bytes& out, uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<uint8_t>(v >> shift));
}

void put_u64_be(Bytes& out, uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<uint8_t>(v >> shift));
}

uint32_t get_u32_be(ByteView in) {
  PORCHAIN_ENFORCE(in.size() == 4, FormatError, "expected 4-byte integer");
  uint32_t v = 0;
  for (uint8_t b : in) v = (v << 8) | b;
  return v;
}

uint64_t get_u64_be(ByteView in) {
  PORCHAIN_ENFORCE(in.size() == 8, FormatError, "expected 8-byte integer");
  uint64_t v = 0;
  for (uint8_t b : in) v = (v << 8) | b;
  return v;
}

Bytes u64_be(uint64_t v) {
  Bytes out;
  put_u64_be(out, v);
  return out;
}

ByteWriter& ByteWriter::field(ByteView data) {
  PORCHAIN_ENFORCE(data.size() <= std::numeric_limits<uint32_t>::max(), ParameterError,
                   "field exceeds 4-byte length prefix");
  put_u32_be(buf_, static_cast<uint32_t>(data.size()));
  buf_.insert(buf_.end(), data.begin(), data.end());
  return *this;
}

ByteWriter& ByteWriter::u8(uint8_t v) { return field(ByteView(&v, 1)); }

ByteWriter& ByteWriter::u32(uint32_t v) {
  Bytes tmp;
  put_u32_be(tmp, v);
  return field(tmp);
}

ByteWriter& ByteWriter::u64(uint64_t v) { return field(u64_be(v)); }

ByteWriter& ByteWriter::raw(ByteView data) {
  buf_.insert(buf_.end(), data.begin(), data.end());
  return *this;
}

ByteView ByteReader::raw(size_t n) {
  PORCHAIN_ENFORCE(n <= remaining(), FormatError, "truncated input");
  ByteView out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

ByteView ByteReader::field() {
  uint32_t len = get_u32_be(raw(4));
  return raw(len);
}

ByteView ByteReader::fixed(size_t n) {
  ByteView f = field();
  PORCHAIN_ENFORCE(f.size() == n, FormatError,
                   "field length " + std::to_string(f.size()) + " != " + std::to_string(n));
  return f;
}

std::string ByteReader::str() {
  ByteView f = field();
  return {f.begin(), f.end()};
}

uint8_t ByteReader::u8() { return fixed(1)[0]; }
uint32_t ByteReader::u32() { return get_u32_be(fixed(4)); }
uint64_t ByteReader::u64() { return get_u64_be(fixed(8)); }

void ByteReader::expect_done() const {
  PORCHAIN_ENFORCE(done(), FormatError, "trailing bytes after canonical encoding");
}

}  // namespace porchain
