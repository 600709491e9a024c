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

#include "porchain/por/keys.hpp"

#include "porchain/common/error.hpp"
#include "porchain/common/format.hpp"
#include "porchain/crypto/domain.hpp"
#include "porchain/crypto/hash.hpp"

namespace porchain::por {

namespace {

void write_public(ByteWriter& w, const PublicKey& pk) {
  w.u8(static_cast<uint8_t>(pk.scheme()));
  w.field(pk.g().to_compressed());
  w.field(pk.v().to_compressed());
  w.u32(static_cast<uint32_t>(pk.u().size()));
  for (const G1& u : pk.u()) w.field(u.to_compressed());
  if (pk.e_uv()) w.field(pk.e_uv()->to_bytes());
}

PublicKey read_public(ByteReader& r) {
  Scheme scheme = scheme_from_byte(r.u8());
  G2 g = G2::from_compressed(r.fixed(G2::kEncodedSize));
  G2 v = G2::from_compressed(r.fixed(G2::kEncodedSize));
  uint32_t count = r.u32();
  PORCHAIN_ENFORCE(count >= 1, FormatError, "public key without generators");
  PORCHAIN_ENFORCE(scheme != Scheme::kPPAuB || count == 1, FormatError,
                   "PPAuB key must carry exactly one generator");
  PORCHAIN_ENFORCE(count <= r.remaining() / (4 + G1::kEncodedSize), FormatError,
                   "generator count exceeds input");
  std::vector<G1> u;
  u.reserve(count);
  for (uint32_t j = 0; j < count; ++j) u.push_back(G1::from_compressed(r.fixed(G1::kEncodedSize)));
  std::optional<GT> e_uv;
  if (scheme == Scheme::kPPAuB) {
    e_uv = GT::from_bytes(r.fixed(GT::kEncodedSize));
    PORCHAIN_ENFORCE(*e_uv == crypto::pairing(u[0], v), FormatError,
                     "stored e(u, v) does not match the key");
  }
  return PublicKey(scheme, g, v, std::move(u), e_uv);
}

Scalar nonzero_scalar(crypto::XofSampler& rng) {
  for (;;) {
    Scalar x = rng.scalar();
    if (!x.is_zero()) return x;
  }
}

}  // namespace

PublicKey::PublicKey(Scheme scheme, G2 g, G2 v, std::vector<G1> u, std::optional<GT> e_uv)
    : scheme_(scheme),
      g_(g),
      v_(v),
      u_(std::move(u)),
      u_batch_(u_),
      e_uv_(std::move(e_uv)) {
  PORCHAIN_ENFORCE(!u_.empty(), ParameterError, "public key needs at least one generator");
  PORCHAIN_ENFORCE(scheme_ == Scheme::kAuB || (u_.size() == 1 && e_uv_), ParameterError,
                   "PPAuB key needs one generator and e(u, v)");
}

Bytes PublicKey::encode() const {
  ByteWriter w;
  write_header(w, magic::kPublicKey);
  write_public(w, *this);
  return std::move(w).take();
}

PublicKey PublicKey::decode(ByteView bytes) {
  ByteReader r(bytes);
  read_header(r, magic::kPublicKey);
  PublicKey pk = read_public(r);
  r.expect_done();
  return pk;
}

Hash32 PublicKey::digest() const { return crypto::sha256(encode()); }

Bytes OwnerKeys::encode_secret() const {
  ByteWriter w;
  write_header(w, magic::kSecretKey);
  w.field(sk.to_bytes());
  write_public(w, pk);
  return std::move(w).take();
}

OwnerKeys OwnerKeys::decode_secret(ByteView bytes) {
  ByteReader r(bytes);
  read_header(r, magic::kSecretKey);
  Scalar sk = Scalar::from_canonical(r.fixed(Scalar::kEncodedSize));
  PublicKey pk = read_public(r);
  r.expect_done();
  PORCHAIN_ENFORCE(pk.g() * sk == pk.v(), FormatError, "secret key does not match v");
  return OwnerKeys{sk, std::move(pk)};
}

OwnerKeys keygen_aub(const crypto::PairingSuite& suite, size_t sectors, crypto::XofSampler& rng) {
  PORCHAIN_ENFORCE(sectors >= 1, ParameterError, "sector count must be at least 1");
  Scalar sk = nonzero_scalar(rng);
  Hash32 u_seed = rng.bytes32();
  std::vector<G1> u;
  u.reserve(sectors);
  for (size_t j = 1; j <= sectors; ++j) {
    Bytes msg(u_seed.begin(), u_seed.end());
    put_u64_be(msg, j);
    u.push_back(crypto::hash_to_g1(domain::kAubGenerator, msg));
  }
  G2 g = suite.g2_generator();
  return OwnerKeys{sk, PublicKey(Scheme::kAuB, g, g * sk, std::move(u), std::nullopt)};
}

OwnerKeys keygen_ppaub(const crypto::PairingSuite& suite, crypto::XofSampler& rng) {
  Scalar sk = nonzero_scalar(rng);
  Hash32 u_seed = rng.bytes32();
  G1 u = crypto::hash_to_g1(domain::kPpaubGenerator, u_seed);
  G2 g = suite.g2_generator();
  G2 v = g * sk;
  GT e_uv = crypto::pairing(u, v);
  return OwnerKeys{sk, PublicKey(Scheme::kPPAuB, g, v, {u}, e_uv)};
}

}  // namespace porchain::por
