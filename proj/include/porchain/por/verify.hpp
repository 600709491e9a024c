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
#include <span>
#include <string_view>
#include <vector>

#include "porchain/por/keys.hpp"
#include "porchain/por/query.hpp"
#include "porchain/por/response.hpp"

namespace porchain::por {

// Both kInvalid and kMalformed are audit failures; disputes report which.
enum class VerifyStatus {
  kValid,
  kInvalid,    // well-formed inputs, pairing equation false
  kMalformed,  // undecodable element, wrong mu length, index 0, missing R
};

std::string_view verify_status_name(VerifyStatus status);

// e(sigma, g) == e(prod H(i)^{nu_i} * prod_j u_j^{mu_j}, v) over the multiset
// of entries.
VerifyStatus verify_aub(std::span<const QueryEntry> entries, const G1& sigma,
                        std::span<const Scalar> mu, const PublicKey& pk);

// R * e(sigma^gamma, g) == e((prod H_1(W_i)^{nu_i})^gamma * u^mu, v) with
// gamma = H_2(R) recomputed from R.
VerifyStatus verify_ppaub(std::span<const QueryEntry> entries, const G1& sigma, const Scalar& mu,
                          const GT& R, const Scalar& fileid, const PublicKey& pk);

// Decodes proof bytes for `pk.scheme()` and verifies; decoding failures map
// to kMalformed.
VerifyStatus verify_encoded(std::span<const QueryEntry> entries, ByteView proof,
                            const PublicKey& pk, const std::optional<Scalar>& fileid);

VerifyStatus verify_response(std::span<const QueryEntry> entries, const PorResponse& resp,
                             const PublicKey& pk, const std::optional<Scalar>& fileid);

// Running (Q_all, sigma_all, mu_all[, R]) of one audit session.
struct Accumulator {
  Scheme scheme = Scheme::kAuB;
  std::vector<QueryEntry> q_all;
  G1 sigma_all;
  std::vector<Scalar> mu_all;
  std::optional<GT> R;  // PPAuB: fixed by the first folded response
  size_t responses = 0;

  static Accumulator empty(Scheme scheme, size_t mu_len);
  PorResponse as_response() const;
};

// Multiset union of entries, group product of sigma, componentwise sum of
// mu. Throws ParameterError on a scheme or shape mismatch, including a
// PPAuB response whose R differs from the session's.
Accumulator aggregate(Accumulator acc, const Query& query, const PorResponse& resp);

VerifyStatus verify_accumulator(const Accumulator& acc, const PublicKey& pk,
                                const std::optional<Scalar>& fileid);

}  // namespace porchain::por
