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

#include "porchain/por/keys.hpp"
#include "porchain/por/params.hpp"

namespace porchain::por {

// One file block: s sector values m_i1..m_is.
using Block = std::vector<Scalar>;

struct FileLayout {
  Scheme scheme = Scheme::kAuB;
  uint64_t n = 0;
  size_t s = 1;
  size_t sector_width = default_sector_width();
  uint64_t original_length = 0;
  std::optional<Scalar> fileid;  // PPAuB only

  bool operator==(const FileLayout&) const = default;
};

struct TaggedFile {
  FileLayout layout;
  std::vector<Block> blocks;    // n x s
  std::vector<G1> tags;         // sigma_i
  std::vector<Hash32> digests;  // h_i = H(m_i || sigma_i)

  // Versioned tag-file encoding ("PCTG"): layout header, tags, digests.
  Bytes encode_tags() const;
  // Versioned block-file encoding ("PCBK"): layout header and sectors.
  Bytes encode_blocks() const;
  static TaggedFile decode(ByteView block_file, ByteView tag_file);
};

// Splits `data` into ceil(len / (s * width)) blocks of s sectors. Each
// sector is read as a big-endian integer; the final partial sector holds
// only the remaining bytes and missing sectors are zero. Throws
// ParameterError on empty input.
std::vector<Block> chunk_file(ByteView data, const PorParams& params);
// Inverse of chunk_file given the original byte length.
Bytes unchunk_file(const std::vector<Block>& blocks, size_t sector_width, uint64_t original_length);

Bytes encode_block(const Block& block);
Block decode_block(ByteView bytes, size_t s);
Hash32 block_digest(const Block& block, const G1& tag);

// H(i): domain-tagged hash of the 8-byte big-endian block index.
G1 aub_block_hash(uint64_t index);
// H_1(W_i) with W_i = canonical(fileid) || 8-byte big-endian i.
G1 ppaub_block_hash(const Scalar& fileid, uint64_t index);

// sigma_i = [H(i) * prod_j u_j^{m_ij}]^sk
G1 tag_block_aub(uint64_t index, const Block& block, const OwnerKeys& keys);
// sigma_i = [H_1(W_i) * u^{m_i}]^sk
G1 tag_block_ppaub(const Scalar& fileid, uint64_t index, const Scalar& block, const OwnerKeys& keys);

// Chunks, tags and digests a whole file. For PPAuB `params.fileid` must be
// set. `threads` > 1 tags blocks in parallel.
TaggedFile tag_file(ByteView data, const PorParams& params, const OwnerKeys& keys,
                    unsigned threads = 1);

}  // namespace porchain::por
