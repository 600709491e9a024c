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

#include <vector>

#include "porchain/por/params.hpp"

namespace porchain::por {

struct QueryEntry {
  uint64_t index = 0;  // 1-based block index
  Scalar coeff;        // nu_i

  bool operator==(const QueryEntry& o) const { return index == o.index && coeff == o.coeff; }
};

struct Query {
  static constexpr size_t kEntrySize = 8 + Scalar::kEncodedSize;

  std::vector<QueryEntry> entries;
  Hash32 seed{};
  uint64_t seq = 0;
  Bytes sig;  // auditor signature over signing_bytes(channel_id); empty if unsigned

  // lp(tag) lp(entries) lp(seed) lp(seq) lp(channel_id)
  Bytes signing_bytes(const Hash32& channel_id) const;
  // Canonical record: lp(entries) lp(seed) lp(seq) lp(sig).
  Bytes encode() const;
  static Query decode(ByteView bytes);

  // Same challenge (entries, seed, seq); the signature is not compared.
  bool same_challenge(const Query& o) const {
    return entries == o.entries && seed == o.seed && seq == o.seq;
  }
};

Bytes encode_entries(const std::vector<QueryEntry>& entries);
std::vector<QueryEntry> decode_entries(ByteView bytes);

// Query number `seq` of a session seeded with `seed`: l distinct ascending
// indices in [1, n] and l coefficients, both drawn from streams keyed by
// SHA-256(seed || seq). Throws ParameterError unless 1 <= l <= n.
Query gen_query(const Hash32& seed, uint64_t n, uint64_t l, uint64_t seq);
Query gen_query(const Hash32& seed, const PorParams& params, uint64_t seq);

}  // namespace porchain::por
