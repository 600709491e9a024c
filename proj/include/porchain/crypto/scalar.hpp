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

#include <blst.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "porchain/common/bytes.hpp"

namespace porchain::crypto {

// Element of the scalar field Z_p of the pairing groups (p is the BLS12-381
// group order r). Stored in Montgomery form; the canonical encoding is
// 32-byte big-endian.
class Scalar {
 public:
  static constexpr size_t kEncodedSize = 32;
  static constexpr size_t kModulusBits = 255;

  Scalar();

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_u64(1); }
  static Scalar from_u64(uint64_t v);

  // Strict canonical decoding: exactly 32 bytes, value < p.
  static std::optional<Scalar> try_from_canonical(ByteView bytes);
  static Scalar from_canonical(ByteView bytes);
  // Big-endian integer of at most 31 bytes. Always < p, never throws on
  // value; used for file sectors.
  static Scalar from_small_be(ByteView bytes);
  // Interprets arbitrary-length big-endian bytes and reduces mod p.
  static Scalar from_be_reduced(ByteView bytes);

  std::array<uint8_t, kEncodedSize> to_bytes() const;
  // Little-endian integer form consumed by blst scalar multiplication.
  blst_scalar to_blst() const;
  // Writes the low `width` bytes of the value big-endian; the caller
  // guarantees the value fits.
  void to_small_be(uint8_t* out, size_t width) const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  // Throws ParameterError on zero.
  Scalar inverse() const;

  bool is_zero() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_hex() const;

 private:
  blst_fr v_;
};

}  // namespace porchain::crypto
