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

#include "porchain/por/query.hpp"

#include <algorithm>

#include "porchain/common/error.hpp"
#include "porchain/crypto/domain.hpp"
#include "porchain/crypto/hash.hpp"
#include "porchain/crypto/xof.hpp"

namespace porchain::por {

Bytes encode_entries(const std::vector<QueryEntry>& entries) {
  Bytes out;
  out.reserve(entries.size() * Query::kEntrySize);
  for (const QueryEntry& e : entries) {
    put_u64_be(out, e.index);
    auto c = e.coeff.to_bytes();
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<QueryEntry> decode_entries(ByteView bytes) {
  PORCHAIN_ENFORCE(bytes.size() % Query::kEntrySize == 0, FormatError,
                   "query entries are not a whole number of records");
  std::vector<QueryEntry> entries;
  entries.reserve(bytes.size() / Query::kEntrySize);
  for (size_t off = 0; off < bytes.size(); off += Query::kEntrySize) {
    QueryEntry e;
    e.index = get_u64_be(bytes.subspan(off, 8));
    e.coeff = Scalar::from_canonical(bytes.subspan(off + 8, Scalar::kEncodedSize));
    entries.push_back(e);
  }
  return entries;
}

Bytes Query::signing_bytes(const Hash32& channel_id) const {
  ByteWriter w;
  w.field(domain::kChannelQuery);
  w.field(encode_entries(entries));
  w.field(seed);
  w.u64(seq);
  w.field(channel_id);
  return std::move(w).take();
}

Bytes Query::encode() const {
  ByteWriter w;
  w.field(encode_entries(entries));
  w.field(seed);
  w.u64(seq);
  w.field(sig);
  return std::move(w).take();
}

Query Query::decode(ByteView bytes) {
  ByteReader r(bytes);
  Query q;
  q.entries = decode_entries(r.field());
  ByteView seed = r.fixed(32);
  std::copy(seed.begin(), seed.end(), q.seed.begin());
  q.seq = r.u64();
  ByteView sig = r.field();
  q.sig.assign(sig.begin(), sig.end());
  r.expect_done();
  return q;
}

Query gen_query(const Hash32& seed, uint64_t n, uint64_t l, uint64_t seq) {
  PORCHAIN_ENFORCE(l >= 1 && l <= n, ParameterError,
                   "query size must satisfy 1 <= l <= n (l=" + std::to_string(l) +
                       ", n=" + std::to_string(n) + ")");
  Bytes material(seed.begin(), seed.end());
  put_u64_be(material, seq);
  const Hash32 session = crypto::tagged_hash(domain::kQuerySession, material);

  crypto::XofSampler idx_stream(session, domain::kQueryIndices);
  crypto::XofSampler coef_stream(session, domain::kQueryCoefficients);
  std::vector<uint64_t> indices = crypto::sample_distinct_indices(idx_stream, n, l);
  std::vector<Scalar> coeffs = crypto::sample_scalars(coef_stream, l);

  Query q;
  q.seed = seed;
  q.seq = seq;
  q.entries.reserve(l);
  for (size_t k = 0; k < l; ++k) q.entries.push_back({indices[k], coeffs[k]});
  return q;
}

Query gen_query(const Hash32& seed, const PorParams& params, uint64_t seq) {
  return gen_query(seed, params.n, params.l, seq);
}

}  // namespace porchain::por
