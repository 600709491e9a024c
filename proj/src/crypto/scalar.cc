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

#include "porchain/crypto/scalar.hpp"

#include <cstring>

#include "porchain/common/error.hpp"

namespace porchain::crypto {

Scalar::Scalar() { std::memset(&v_, 0, sizeof(v_)); }

Scalar Scalar::from_u64(uint64_t v) {
  const uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar s;
  blst_fr_from_uint64(&s.v_, limbs);
  return s;
}

std::optional<Scalar> Scalar::try_from_canonical(ByteView bytes) {
  if (bytes.size() != kEncodedSize) return std::nullopt;
  blst_scalar raw;
  blst_scalar_from_bendian(&raw, bytes.data());
  if (!blst_scalar_fr_check(&raw)) return std::nullopt;
  Scalar s;
  blst_fr_from_scalar(&s.v_, &raw);
  return s;
}

Scalar Scalar::from_canonical(ByteView bytes) {
  auto s = try_from_canonical(bytes);
  PORCHAIN_ENFORCE(s.has_value(), FormatError, "scalar is not a canonical 32-byte value below p");
  return *s;
}

Scalar Scalar::from_small_be(ByteView bytes) {
  PORCHAIN_ENFORCE(bytes.size() < kEncodedSize, ParameterError,
                   "sector wider than 31 bytes may exceed the field order");
  std::array<uint8_t, kEncodedSize> padded{};
  std::memcpy(padded.data() + (kEncodedSize - bytes.size()), bytes.data(), bytes.size());
  return from_canonical(padded);
}

Scalar Scalar::from_be_reduced(ByteView bytes) {
  blst_scalar raw;
  blst_scalar_from_be_bytes(&raw, bytes.data(), bytes.size());
  Scalar s;
  blst_fr_from_scalar(&s.v_, &raw);
  return s;
}

std::array<uint8_t, Scalar::kEncodedSize> Scalar::to_bytes() const {
  blst_scalar raw;
  blst_scalar_from_fr(&raw, &v_);
  std::array<uint8_t, kEncodedSize> out;
  blst_bendian_from_scalar(out.data(), &raw);
  return out;
}

blst_scalar Scalar::to_blst() const {
  blst_scalar raw;
  blst_scalar_from_fr(&raw, &v_);
  return raw;
}

void Scalar::to_small_be(uint8_t* out, size_t width) const {
  auto full = to_bytes();
  std::memcpy(out, full.data() + (kEncodedSize - width), width);
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  blst_fr_add(&r.v_, &v_, &o.v_);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  blst_fr_sub(&r.v_, &v_, &o.v_);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  blst_fr_mul(&r.v_, &v_, &o.v_);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  blst_fr_cneg(&r.v_, &v_, true);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  blst_fr_add(&v_, &v_, &o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  blst_fr_mul(&v_, &v_, &o.v_);
  return *this;
}

Scalar Scalar::inverse() const {
  PORCHAIN_ENFORCE(!is_zero(), ParameterError, "zero has no inverse");
  Scalar r;
  blst_fr_inverse(&r.v_, &v_);
  return r;
}

bool Scalar::is_zero() const {
  static const blst_fr kZero{};
  return std::memcmp(&v_, &kZero, sizeof(v_)) == 0;
}

bool Scalar::operator==(const Scalar& o) const { return to_bytes() == o.to_bytes(); }

std::string Scalar::to_hex() const { return porchain::to_hex(to_bytes()); }

}  // namespace porchain::crypto
