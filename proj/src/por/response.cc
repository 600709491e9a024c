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

#include "porchain/por/response.hpp"

#include "porchain/common/error.hpp"

namespace porchain::por {

namespace {

void check_indices(const std::vector<QueryEntry>& entries, const TaggedFile& file) {
  for (const QueryEntry& e : entries) {
    PORCHAIN_ENFORCE(e.index >= 1 && e.index <= file.blocks.size(), ParameterError,
                     "query index " + std::to_string(e.index) + " outside [1, " +
                         std::to_string(file.blocks.size()) + "]");
  }
}

G1 aggregate_tags(const std::vector<QueryEntry>& entries, const TaggedFile& file) {
  std::vector<G1> points;
  std::vector<Scalar> coeffs;
  points.reserve(entries.size());
  coeffs.reserve(entries.size());
  for (const QueryEntry& e : entries) {
    points.push_back(file.tags[e.index - 1]);
    coeffs.push_back(e.coeff);
  }
  return crypto::multi_exp(points, coeffs);
}

}  // namespace

Bytes PorResponse::encode_proof() const {
  ByteWriter w;
  w.field(sigma.to_compressed());
  w.u32(static_cast<uint32_t>(mu.size()));
  for (const Scalar& m : mu) w.field(m.to_bytes());
  if (R) w.field(R->to_bytes());
  return std::move(w).take();
}

PorResponse PorResponse::decode_proof(ByteView bytes, Scheme scheme, size_t sectors) {
  ByteReader r(bytes);
  PorResponse resp;
  resp.sigma = G1::from_compressed(r.fixed(G1::kEncodedSize));
  const uint32_t count = r.u32();
  const size_t expected = scheme == Scheme::kAuB ? sectors : 1;
  PORCHAIN_ENFORCE(count == expected, FormatError,
                   "proof carries " + std::to_string(count) + " mu values, expected " +
                       std::to_string(expected));
  resp.mu.reserve(count);
  for (uint32_t j = 0; j < count; ++j) {
    resp.mu.push_back(Scalar::from_canonical(r.fixed(Scalar::kEncodedSize)));
  }
  if (scheme == Scheme::kPPAuB) resp.R = GT::from_bytes(r.fixed(GT::kEncodedSize));
  r.expect_done();
  return resp;
}

std::vector<Scalar> linear_combination(const std::vector<QueryEntry>& entries,
                                       const TaggedFile& file) {
  check_indices(entries, file);
  std::vector<Scalar> mu(file.layout.s);
  for (const QueryEntry& e : entries) {
    const Block& block = file.blocks[e.index - 1];
    for (size_t j = 0; j < mu.size(); ++j) mu[j] += e.coeff * block[j];
  }
  return mu;
}

PorResponse gen_response_aub(const Query& query, const TaggedFile& file) {
  PorResponse resp;
  resp.mu = linear_combination(query.entries, file);
  resp.sigma = aggregate_tags(query.entries, file);
  return resp;
}

PpaubProof gen_response_ppaub(const Query& query, const TaggedFile& file, const PublicKey& pk,
                              bool first_flag, std::optional<Scalar> r, crypto::XofSampler& rng) {
  PORCHAIN_ENFORCE(pk.scheme() == Scheme::kPPAuB && pk.e_uv(), ParameterError,
                   "PPAuB response needs a PPAuB key");
  if (first_flag) {
    PORCHAIN_ENFORCE(!r, ParameterError, "first response draws its own r");
    r = rng.scalar();
  }
  PORCHAIN_ENFORCE(r.has_value(), ParameterError, "follow-up response needs the session r");

  const Scalar x = linear_combination(query.entries, file)[0];
  PpaubProof out{PorResponse{}, *r};
  out.response.R = pk.e_uv()->pow(*r);
  const Scalar gamma = crypto::hash_gt_to_scalar(*out.response.R);
  out.response.sigma = aggregate_tags(query.entries, file);
  out.response.mu = {first_flag ? *r + gamma * x : gamma * x};
  return out;
}

}  // namespace porchain::por
