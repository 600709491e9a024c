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

#include "porchain/crypto/xof.hpp"
#include "porchain/por/file.hpp"
#include "porchain/por/query.hpp"

namespace porchain::por {

struct PorResponse {
  G1 sigma;
  std::vector<Scalar> mu;  // one per sector (AuB) or a single value (PPAuB)
  std::optional<GT> R;     // PPAuB commitment e(u, v)^r
  Bytes server_sig;

  // Proof bytes: lp(sigma) lp(mu...) [lp(R)]. The signature is carried by
  // the enclosing channel message.
  Bytes encode_proof() const;
  // Throws FormatError on any non-canonical element or shape mismatch.
  static PorResponse decode_proof(ByteView bytes, Scheme scheme, size_t sectors);

  Scheme scheme() const { return R ? Scheme::kPPAuB : Scheme::kAuB; }
};

// sigma = prod sigma_i^{nu_i}; mu_j = sum nu_i * m_ij. Throws ParameterError
// for an index outside [1, n].
PorResponse gen_response_aub(const Query& query, const TaggedFile& file);

struct PpaubProof {
  PorResponse response;
  Scalar r;  // session masking value, reused while the channel is open
};

// R = e(u,v)^r, gamma = H_2(R), sigma = prod sigma_i^{nu_i};
// mu = r + gamma * sum nu_i m_i when first_flag, else gamma * sum nu_i m_i.
// first_flag draws a fresh r from `rng`; otherwise `r` must be supplied.
PpaubProof gen_response_ppaub(const Query& query, const TaggedFile& file, const PublicKey& pk,
                              bool first_flag, std::optional<Scalar> r, crypto::XofSampler& rng);

// sum nu_i * m_ij for sector j, the unmasked linear combination.
std::vector<Scalar> linear_combination(const std::vector<QueryEntry>& entries,
                                       const TaggedFile& file);

}  // namespace porchain::por
