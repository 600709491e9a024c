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

#include "porchain/crypto/group.hpp"

#include <cstring>

#include "porchain/common/error.hpp"
#include "porchain/crypto/domain.hpp"
#include "porchain/crypto/hash.hpp"

namespace porchain::crypto {

namespace {

constexpr size_t kFpBytes = 48;

// Visits the twelve base-field coefficients of an fp12 in tower order.
template <typename F, typename Fn>
void for_each_fp(F& f, Fn&& fn) {
  for (auto& fp6 : f.fp6)
    for (auto& fp2 : fp6.fp2)
      for (auto& fp : fp2.fp) fn(fp);
}

}  // namespace

// ---- G1 ----

G1::G1() { std::memset(&p_, 0, sizeof(p_)); }

G1 G1::generator() { return from_raw(*blst_p1_generator()); }

G1 G1::from_raw(const blst_p1& p) {
  G1 g;
  g.p_ = p;
  return g;
}

std::optional<G1> G1::try_from_compressed(ByteView bytes) {
  if (bytes.size() != kEncodedSize) return std::nullopt;
  blst_p1_affine aff;
  if (blst_p1_uncompress(&aff, bytes.data()) != BLST_SUCCESS) return std::nullopt;
  if (!blst_p1_affine_in_g1(&aff)) return std::nullopt;
  G1 out;
  blst_p1_from_affine(&out.p_, &aff);
  return out;
}

G1 G1::from_compressed(ByteView bytes) {
  auto p = try_from_compressed(bytes);
  PORCHAIN_ENFORCE(p.has_value(), FormatError, "invalid compressed G1 element");
  return *p;
}

std::array<uint8_t, G1::kEncodedSize> G1::to_compressed() const {
  std::array<uint8_t, kEncodedSize> out;
  blst_p1_compress(out.data(), &p_);
  return out;
}

G1 G1::operator+(const G1& o) const {
  G1 r;
  blst_p1_add_or_double(&r.p_, &p_, &o.p_);
  return r;
}

G1& G1::operator+=(const G1& o) {
  blst_p1_add_or_double(&p_, &p_, &o.p_);
  return *this;
}

G1 G1::operator-() const {
  G1 r = *this;
  blst_p1_cneg(&r.p_, true);
  return r;
}

G1 G1::operator*(const Scalar& k) const {
  blst_scalar s = k.to_blst();
  G1 r;
  blst_p1_mult(&r.p_, &p_, s.b, Scalar::kModulusBits);
  return r;
}

bool G1::is_identity() const { return blst_p1_is_inf(&p_); }
bool G1::operator==(const G1& o) const { return blst_p1_is_equal(&p_, &o.p_); }

blst_p1_affine G1::to_affine() const {
  blst_p1_affine a;
  blst_p1_to_affine(&a, &p_);
  return a;
}

// ---- G2 ----

G2::G2() { std::memset(&p_, 0, sizeof(p_)); }

G2 G2::generator() {
  G2 g;
  g.p_ = *blst_p2_generator();
  return g;
}

std::optional<G2> G2::try_from_compressed(ByteView bytes) {
  if (bytes.size() != kEncodedSize) return std::nullopt;
  blst_p2_affine aff;
  if (blst_p2_uncompress(&aff, bytes.data()) != BLST_SUCCESS) return std::nullopt;
  if (!blst_p2_affine_in_g2(&aff)) return std::nullopt;
  G2 out;
  blst_p2_from_affine(&out.p_, &aff);
  return out;
}

G2 G2::from_compressed(ByteView bytes) {
  auto p = try_from_compressed(bytes);
  PORCHAIN_ENFORCE(p.has_value(), FormatError, "invalid compressed G2 element");
  return *p;
}

std::array<uint8_t, G2::kEncodedSize> G2::to_compressed() const {
  std::array<uint8_t, kEncodedSize> out;
  blst_p2_compress(out.data(), &p_);
  return out;
}

G2 G2::operator+(const G2& o) const {
  G2 r;
  blst_p2_add_or_double(&r.p_, &p_, &o.p_);
  return r;
}

G2 G2::operator-() const {
  G2 r = *this;
  blst_p2_cneg(&r.p_, true);
  return r;
}

G2 G2::operator*(const Scalar& k) const {
  blst_scalar s = k.to_blst();
  G2 r;
  blst_p2_mult(&r.p_, &p_, s.b, Scalar::kModulusBits);
  return r;
}

bool G2::is_identity() const { return blst_p2_is_inf(&p_); }
bool G2::operator==(const G2& o) const { return blst_p2_is_equal(&p_, &o.p_); }

blst_p2_affine G2::to_affine() const {
  blst_p2_affine a;
  blst_p2_to_affine(&a, &p_);
  return a;
}

// ---- GT ----

GT::GT() { f_ = *blst_fp12_one(); }

std::optional<GT> GT::try_from_bytes(ByteView bytes) {
  if (bytes.size() != kEncodedSize) return std::nullopt;
  GT out;
  size_t off = 0;
  for_each_fp(out.f_, [&](blst_fp& fp) {
    blst_fp_from_bendian(&fp, bytes.data() + off);
    off += kFpBytes;
  });
  // Reject non-reduced coefficients: the encoding must round-trip.
  Bytes again = out.to_bytes();
  if (!std::equal(again.begin(), again.end(), bytes.begin())) return std::nullopt;
  if (!blst_fp12_in_group(&out.f_)) return std::nullopt;
  return out;
}

GT GT::from_bytes(ByteView bytes) {
  auto g = try_from_bytes(bytes);
  PORCHAIN_ENFORCE(g.has_value(), FormatError, "invalid GT element encoding");
  return *g;
}

Bytes GT::to_bytes() const {
  Bytes out(kEncodedSize);
  size_t off = 0;
  blst_fp12 copy = f_;
  for_each_fp(copy, [&](blst_fp& fp) {
    blst_bendian_from_fp(out.data() + off, &fp);
    off += kFpBytes;
  });
  return out;
}

GT GT::operator*(const GT& o) const {
  GT r;
  blst_fp12_mul(&r.f_, &f_, &o.f_);
  return r;
}

GT& GT::operator*=(const GT& o) {
  blst_fp12_mul(&f_, &f_, &o.f_);
  return *this;
}

GT GT::pow(const Scalar& k) const {
  // Left-to-right square-and-multiply. Elements of GT lie in the
  // cyclotomic subgroup, so the cheaper cyclotomic squaring applies.
  blst_scalar s = k.to_blst();
  GT acc;
  bool started = false;
  for (int bit = static_cast<int>(Scalar::kModulusBits) - 1; bit >= 0; --bit) {
    if (started) blst_fp12_cyclotomic_sqr(&acc.f_, &acc.f_);
    if ((s.b[bit / 8] >> (bit % 8)) & 1) {
      if (started) {
        blst_fp12_mul(&acc.f_, &acc.f_, &f_);
      } else {
        acc.f_ = f_;
        started = true;
      }
    }
  }
  return acc;
}

GT GT::inverse() const {
  GT r;
  blst_fp12_inverse(&r.f_, &f_);
  return r;
}

bool GT::is_one() const { return blst_fp12_is_one(&f_); }
bool GT::operator==(const GT& o) const { return blst_fp12_is_equal(&f_, &o.f_); }

GT pairing(const G1& p, const G2& q) {
  if (p.is_identity() || q.is_identity()) return GT::one();
  blst_p1_affine pa = p.to_affine();
  blst_p2_affine qa = q.to_affine();
  blst_fp12 ml;
  blst_miller_loop(&ml, &qa, &pa);
  GT out;
  blst_final_exp(&out.f_, &ml);
  return out;
}

GT pairing_product(std::span<const std::pair<G1, G2>> terms) {
  blst_fp12 acc = *blst_fp12_one();
  for (const auto& [p, q] : terms) {
    if (p.is_identity() || q.is_identity()) continue;
    blst_p1_affine pa = p.to_affine();
    blst_p2_affine qa = q.to_affine();
    blst_fp12 ml;
    blst_miller_loop(&ml, &qa, &pa);
    blst_fp12_mul(&acc, &acc, &ml);
  }
  GT out;
  blst_final_exp(&out.f_, &acc);
  return out;
}

// ---- multi-exponentiation ----

namespace {

G1 pippenger(std::span<const blst_p1_affine> points, std::span<const Scalar> scalars) {
  std::vector<const blst_p1_affine*> point_ptrs;
  std::vector<blst_scalar> raw;
  point_ptrs.reserve(points.size());
  raw.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (scalars[i].is_zero()) continue;
    point_ptrs.push_back(&points[i]);
    raw.push_back(scalars[i].to_blst());
  }
  if (point_ptrs.empty()) return G1::identity();
  std::vector<const uint8_t*> scalar_ptrs;
  scalar_ptrs.reserve(raw.size());
  for (const auto& s : raw) scalar_ptrs.push_back(s.b);

  std::vector<uint8_t> scratch(blst_p1s_mult_pippenger_scratch_sizeof(point_ptrs.size()) +
                               sizeof(limb_t));
  auto* scratch_ptr = reinterpret_cast<limb_t*>(
      (reinterpret_cast<uintptr_t>(scratch.data()) + alignof(limb_t) - 1) & ~(alignof(limb_t) - 1));
  blst_p1 out;
  blst_p1s_mult_pippenger(&out, point_ptrs.data(), point_ptrs.size(), scalar_ptrs.data(),
                          Scalar::kModulusBits, scratch_ptr);
  return G1::from_raw(out);
}

std::vector<blst_p1_affine> to_affine_batch(std::span<const G1> points) {
  std::vector<const blst_p1*> ptrs;
  ptrs.reserve(points.size());
  for (const auto& p : points) ptrs.push_back(&p.raw());
  std::vector<blst_p1_affine> out(points.size());
  if (!points.empty()) blst_p1s_to_affine(out.data(), ptrs.data(), ptrs.size());
  return out;
}

}  // namespace

G1 multi_exp(std::span<const G1> points, std::span<const Scalar> scalars) {
  PORCHAIN_ENFORCE(points.size() == scalars.size(), ParameterError,
                   "multi_exp: point and scalar counts differ");
  // Identity points have no affine form; they contribute nothing.
  std::vector<G1> live_points;
  std::vector<Scalar> live_scalars;
  live_points.reserve(points.size());
  live_scalars.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_identity() || scalars[i].is_zero()) continue;
    live_points.push_back(points[i]);
    live_scalars.push_back(scalars[i]);
  }
  auto affine = to_affine_batch(live_points);
  return pippenger(affine, live_scalars);
}

G1Batch::G1Batch(std::span<const G1> points) {
  for (const auto& p : points)
    PORCHAIN_ENFORCE(!p.is_identity(), ParameterError, "G1Batch: identity point");
  affine_ = to_affine_batch(points);
}

G1 G1Batch::multi_exp(std::span<const Scalar> scalars) const {
  PORCHAIN_ENFORCE(scalars.size() == affine_.size(), ParameterError,
                   "G1Batch: scalar count differs from point count");
  return pippenger(affine_, scalars);
}

// ---- hashing into groups ----

G1 hash_to_g1(std::string_view tag, ByteView msg) {
  PORCHAIN_ENFORCE(!tag.empty(), ParameterError, "hash_to_g1 requires a domain tag");
  blst_p1 out;
  blst_hash_to_g1(&out, msg.data(), msg.size(), reinterpret_cast<const uint8_t*>(tag.data()),
                  tag.size(), nullptr, 0);
  return G1::from_raw(out);
}

Scalar hash_gt_to_scalar(const GT& elem) {
  ByteWriter w;
  w.field(domain::kPpaubGtHash).field(elem.to_bytes());
  auto digest = sha512(w.bytes());
  return Scalar::from_be_reduced(digest);
}

}  // namespace porchain::crypto
