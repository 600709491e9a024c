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

#include "porchain/por/verify.hpp"

#include <utility>

#include "porchain/common/error.hpp"

namespace porchain::por {

namespace {

bool has_zero_index(std::span<const QueryEntry> entries) {
  for (const QueryEntry& e : entries) {
    if (e.index == 0) return true;
  }
  return false;
}

// prod H(i)^{nu_i} over the entries, with `hash` the scheme's block oracle.
template <typename HashFn>
G1 weighted_block_hashes(std::span<const QueryEntry> entries, HashFn&& hash) {
  std::vector<G1> points;
  std::vector<Scalar> coeffs;
  points.reserve(entries.size());
  coeffs.reserve(entries.size());
  for (const QueryEntry& e : entries) {
    points.push_back(hash(e.index));
    coeffs.push_back(e.coeff);
  }
  return crypto::multi_exp(points, coeffs);
}

}  // namespace

std::string_view verify_status_name(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::kValid:
      return "valid";
    case VerifyStatus::kInvalid:
      return "invalid";
    case VerifyStatus::kMalformed:
      return "malformed";
  }
  return "unknown";
}

VerifyStatus verify_aub(std::span<const QueryEntry> entries, const G1& sigma,
                        std::span<const Scalar> mu, const PublicKey& pk) {
  if (pk.scheme() != Scheme::kAuB || mu.size() != pk.sectors() || has_zero_index(entries)) {
    return VerifyStatus::kMalformed;
  }
  const G1 x = weighted_block_hashes(entries, aub_block_hash) + pk.u_batch().multi_exp(mu);
  const std::pair<G1, G2> terms[] = {{sigma, pk.g()}, {-x, pk.v()}};
  return crypto::pairing_product(terms).is_one() ? VerifyStatus::kValid : VerifyStatus::kInvalid;
}

VerifyStatus verify_ppaub(std::span<const QueryEntry> entries, const G1& sigma, const Scalar& mu,
                          const GT& R, const Scalar& fileid, const PublicKey& pk) {
  if (pk.scheme() != Scheme::kPPAuB || has_zero_index(entries)) return VerifyStatus::kMalformed;
  const Scalar gamma = crypto::hash_gt_to_scalar(R);
  const G1 hashes = weighted_block_hashes(
      entries, [&](uint64_t i) { return ppaub_block_hash(fileid, i); });
  const G1 x = hashes * gamma + pk.u()[0] * mu;
  const std::pair<G1, G2> terms[] = {{sigma * gamma, pk.g()}, {-x, pk.v()}};
  return (R * crypto::pairing_product(terms)).is_one() ? VerifyStatus::kValid
                                                       : VerifyStatus::kInvalid;
}

VerifyStatus verify_response(std::span<const QueryEntry> entries, const PorResponse& resp,
                             const PublicKey& pk, const std::optional<Scalar>& fileid) {
  if (pk.scheme() == Scheme::kAuB) {
    if (resp.R) return VerifyStatus::kMalformed;
    return verify_aub(entries, resp.sigma, resp.mu, pk);
  }
  if (!resp.R || !fileid || resp.mu.size() != 1) return VerifyStatus::kMalformed;
  return verify_ppaub(entries, resp.sigma, resp.mu[0], *resp.R, *fileid, pk);
}

VerifyStatus verify_encoded(std::span<const QueryEntry> entries, ByteView proof,
                            const PublicKey& pk, const std::optional<Scalar>& fileid) {
  PorResponse resp;
  try {
    resp = PorResponse::decode_proof(proof, pk.scheme(), pk.sectors());
  } catch (const FormatError&) {
    return VerifyStatus::kMalformed;
  }
  return verify_response(entries, resp, pk, fileid);
}

Accumulator Accumulator::empty(Scheme scheme, size_t mu_len) {
  Accumulator acc;
  acc.scheme = scheme;
  acc.mu_all.assign(scheme == Scheme::kAuB ? mu_len : 1, Scalar::zero());
  return acc;
}

PorResponse Accumulator::as_response() const {
  PorResponse resp;
  resp.sigma = sigma_all;
  resp.mu = mu_all;
  resp.R = R;
  return resp;
}

Accumulator aggregate(Accumulator acc, const Query& query, const PorResponse& resp) {
  PORCHAIN_ENFORCE(resp.scheme() == acc.scheme, ParameterError,
                   "response scheme does not match the accumulator");
  PORCHAIN_ENFORCE(resp.mu.size() == acc.mu_all.size(), ParameterError,
                   "response mu length does not match the accumulator");
  if (acc.scheme == Scheme::kPPAuB) {
    if (!acc.R) {
      acc.R = resp.R;
    } else {
      PORCHAIN_ENFORCE(*acc.R == *resp.R, ParameterError,
                       "response commitment R differs from the session's");
    }
  }
  acc.q_all.insert(acc.q_all.end(), query.entries.begin(), query.entries.end());
  acc.sigma_all += resp.sigma;
  for (size_t j = 0; j < acc.mu_all.size(); ++j) acc.mu_all[j] += resp.mu[j];
  ++acc.responses;
  return acc;
}

VerifyStatus verify_accumulator(const Accumulator& acc, const PublicKey& pk,
                                const std::optional<Scalar>& fileid) {
  if (acc.scheme != pk.scheme()) return VerifyStatus::kMalformed;
  if (acc.scheme == Scheme::kAuB) return verify_aub(acc.q_all, acc.sigma_all, acc.mu_all, pk);
  if (!fileid) return VerifyStatus::kMalformed;
  return verify_ppaub(acc.q_all, acc.sigma_all, acc.mu_all[0], acc.R.value_or(GT::one()), *fileid,
                      pk);
}

}  // namespace porchain::por
