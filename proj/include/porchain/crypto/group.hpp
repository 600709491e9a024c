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
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "porchain/common/bytes.hpp"
#include "porchain/crypto/scalar.hpp"

namespace porchain::crypto {

// Pairing groups of BLS12-381. G1 and G2 use additive notation (operator+,
// scalar operator*); GT is written multiplicatively.
//
// Placement: authenticator tags, block hashes and the u generators live in
// G1; g and the owner public key v live in G2.

class G1 {
 public:
  static constexpr size_t kEncodedSize = 48;

  G1();  // identity
  static G1 identity() { return G1(); }
  static G1 generator();
  static G1 from_raw(const blst_p1& p);

  static std::optional<G1> try_from_compressed(ByteView bytes);
  static G1 from_compressed(ByteView bytes);
  std::array<uint8_t, kEncodedSize> to_compressed() const;

  G1 operator+(const G1& o) const;
  G1& operator+=(const G1& o);
  G1 operator-() const;
  G1 operator-(const G1& o) const { return *this + (-o); }
  G1 operator*(const Scalar& k) const;

  bool is_identity() const;
  bool operator==(const G1& o) const;
  bool operator!=(const G1& o) const { return !(*this == o); }

  const blst_p1& raw() const { return p_; }
  blst_p1_affine to_affine() const;

 private:
  blst_p1 p_;
};

class G2 {
 public:
  static constexpr size_t kEncodedSize = 96;

  G2();
  static G2 identity() { return G2(); }
  static G2 generator();

  static std::optional<G2> try_from_compressed(ByteView bytes);
  static G2 from_compressed(ByteView bytes);
  std::array<uint8_t, kEncodedSize> to_compressed() const;

  G2 operator+(const G2& o) const;
  G2 operator-() const;
  G2 operator*(const Scalar& k) const;

  bool is_identity() const;
  bool operator==(const G2& o) const;
  bool operator!=(const G2& o) const { return !(*this == o); }

  const blst_p2& raw() const { return p_; }
  blst_p2_affine to_affine() const;

 private:
  blst_p2 p_;
};

class GT {
 public:
  // Twelve base-field coefficients in tower order, 48-byte big-endian each.
  static constexpr size_t kEncodedSize = 576;

  GT();  // one
  static GT one() { return GT(); }

  static std::optional<GT> try_from_bytes(ByteView bytes);
  static GT from_bytes(ByteView bytes);
  Bytes to_bytes() const;

  GT operator*(const GT& o) const;
  GT& operator*=(const GT& o);
  GT pow(const Scalar& k) const;
  GT inverse() const;

  bool is_one() const;
  bool operator==(const GT& o) const;
  bool operator!=(const GT& o) const { return !(*this == o); }

 private:
  friend GT pairing(const G1&, const G2&);
  friend GT pairing_product(std::span<const std::pair<G1, G2>>);
  blst_fp12 f_;
};

GT pairing(const G1& p, const G2& q);
// prod_i e(P_i, Q_i) with one shared final exponentiation.
GT pairing_product(std::span<const std::pair<G1, G2>> terms);

// sum_i scalars[i] * points[i]. Sizes must match.
G1 multi_exp(std::span<const G1> points, std::span<const Scalar> scalars);

// Affine copy of a fixed point set (e.g. the per-sector generators) so that
// repeated multi-exponentiations skip the projective-to-affine conversion.
class G1Batch {
 public:
  G1Batch() = default;
  explicit G1Batch(std::span<const G1> points);
  size_t size() const { return affine_.size(); }
  G1 multi_exp(std::span<const Scalar> scalars) const;

 private:
  std::vector<blst_p1_affine> affine_;
};

// Hash-to-curve into G1 (RFC 9380 SSWU, SHA-256) with `tag` as the
// domain separation tag. Requires a nonempty tag.
G1 hash_to_g1(std::string_view tag, ByteView msg);

// H_2 : GT -> Z_p. SHA-512 over the canonical GT encoding, reduced mod p.
Scalar hash_gt_to_scalar(const GT& elem);

struct PairingSuite {
  std::string_view curve_id;
  size_t scalar_bits;
  size_t scalar_bytes;

  static PairingSuite bls12_381() { return {"BLS12-381", Scalar::kModulusBits, Scalar::kEncodedSize}; }
  G1 g1_generator() const { return G1::generator(); }
  G2 g2_generator() const { return G2::generator(); }
};

}  // namespace porchain::crypto
