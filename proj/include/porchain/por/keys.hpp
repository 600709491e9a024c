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

#include <optional>
#include <vector>

#include "porchain/crypto/group.hpp"
#include "porchain/crypto/xof.hpp"
#include "porchain/por/params.hpp"

namespace porchain::por {

using crypto::G1;
using crypto::G2;
using crypto::GT;

// Verification key of the file owner: v = g^sk, the sector generators u_j
// and, for PPAuB, the precomputed e(u, v).
class PublicKey {
 public:
  PublicKey(Scheme scheme, G2 g, G2 v, std::vector<G1> u, std::optional<GT> e_uv);

  Scheme scheme() const { return scheme_; }
  const G2& g() const { return g_; }
  const G2& v() const { return v_; }
  const std::vector<G1>& u() const { return u_; }
  const crypto::G1Batch& u_batch() const { return u_batch_; }
  const std::optional<GT>& e_uv() const { return e_uv_; }
  size_t sectors() const { return u_.size(); }

  // Versioned key-file encoding ("PCPK").
  Bytes encode() const;
  static PublicKey decode(ByteView bytes);
  Hash32 digest() const;

 private:
  Scheme scheme_;
  G2 g_;
  G2 v_;
  std::vector<G1> u_;
  crypto::G1Batch u_batch_;
  std::optional<GT> e_uv_;
};

struct OwnerKeys {
  Scalar sk;
  PublicKey pk;

  // Versioned key-file encoding ("PCSK"): secret scalar plus public key.
  Bytes encode_secret() const;
  static OwnerKeys decode_secret(ByteView bytes);
};

OwnerKeys keygen_aub(const crypto::PairingSuite& suite, size_t sectors, crypto::XofSampler& rng);
OwnerKeys keygen_ppaub(const crypto::PairingSuite& suite, crypto::XofSampler& rng);

}  // namespace porchain::por
