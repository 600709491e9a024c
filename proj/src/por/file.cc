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

#include "porchain/por/file.hpp"

#include <algorithm>
#include <thread>

#include "porchain/common/error.hpp"
#include "porchain/common/format.hpp"
#include "porchain/crypto/domain.hpp"
#include "porchain/crypto/hash.hpp"

namespace porchain::por {

namespace {

void write_layout(ByteWriter& w, const FileLayout& layout) {
  w.u8(static_cast<uint8_t>(layout.scheme));
  w.u64(layout.n);
  w.u32(static_cast<uint32_t>(layout.s));
  w.u32(static_cast<uint32_t>(layout.sector_width));
  w.u64(layout.original_length);
  if (layout.fileid) {
    w.field(layout.fileid->to_bytes());
  } else {
    w.field(ByteView{});
  }
}

FileLayout read_layout(ByteReader& r) {
  FileLayout layout;
  layout.scheme = scheme_from_byte(r.u8());
  layout.n = r.u64();
  layout.s = r.u32();
  layout.sector_width = r.u32();
  layout.original_length = r.u64();
  ByteView fid = r.field();
  if (!fid.empty()) layout.fileid = Scalar::from_canonical(fid);
  PORCHAIN_ENFORCE(layout.s >= 1 && layout.sector_width >= 1 &&
                       layout.sector_width <= default_sector_width(),
                   FormatError, "bad block geometry in file header");
  PORCHAIN_ENFORCE(layout.scheme == Scheme::kAuB || (layout.s == 1 && layout.fileid), FormatError,
                   "PPAuB file needs one sector and a fileid");
  PORCHAIN_ENFORCE(layout.n == block_count(layout.original_length, layout.s, layout.sector_width),
                   FormatError, "block count does not match the original length");
  return layout;
}

Bytes index_message(uint64_t index) { return u64_be(index); }

}  // namespace

std::vector<Block> chunk_file(ByteView data, const PorParams& params) {
  params.validate();
  PORCHAIN_ENFORCE(!data.empty(), ParameterError, "cannot chunk an empty file");
  const size_t w = params.sector_width_bytes;
  const uint64_t n = block_count(data.size(), params.s, w);
  std::vector<Block> blocks(n, Block(params.s));
  size_t pos = 0;
  for (uint64_t i = 0; i < n && pos < data.size(); ++i) {
    for (size_t j = 0; j < params.s && pos < data.size(); ++j) {
      size_t take = std::min(w, data.size() - pos);
      blocks[i][j] = Scalar::from_small_be(data.subspan(pos, take));
      pos += take;
    }
  }
  return blocks;
}

Bytes unchunk_file(const std::vector<Block>& blocks, size_t sector_width, uint64_t original_length) {
  Bytes out(original_length);
  uint64_t pos = 0;
  for (const Block& block : blocks) {
    for (const Scalar& m : block) {
      if (pos >= original_length) return out;
      size_t take = static_cast<size_t>(std::min<uint64_t>(sector_width, original_length - pos));
      m.to_small_be(out.data() + pos, take);
      pos += take;
    }
  }
  PORCHAIN_ENFORCE(pos == original_length, FormatError, "blocks shorter than the original length");
  return out;
}

Bytes encode_block(const Block& block) {
  Bytes out;
  out.reserve(block.size() * Scalar::kEncodedSize);
  for (const Scalar& m : block) {
    auto b = m.to_bytes();
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Block decode_block(ByteView bytes, size_t s) {
  PORCHAIN_ENFORCE(bytes.size() == s * Scalar::kEncodedSize, FormatError, "block length mismatch");
  Block block;
  block.reserve(s);
  for (size_t j = 0; j < s; ++j) {
    block.push_back(Scalar::from_canonical(bytes.subspan(j * Scalar::kEncodedSize, Scalar::kEncodedSize)));
  }
  return block;
}

Hash32 block_digest(const Block& block, const G1& tag) {
  return crypto::sha256_concat({encode_block(block), tag.to_compressed()});
}

G1 aub_block_hash(uint64_t index) {
  return crypto::hash_to_g1(domain::kAubBlockHash, index_message(index));
}

G1 ppaub_block_hash(const Scalar& fileid, uint64_t index) {
  auto id = fileid.to_bytes();
  Bytes w(id.begin(), id.end());
  put_u64_be(w, index);
  return crypto::hash_to_g1(domain::kPpaubBlockHash, w);
}

G1 tag_block_aub(uint64_t index, const Block& block, const OwnerKeys& keys) {
  PORCHAIN_ENFORCE(keys.pk.scheme() == Scheme::kAuB, ParameterError, "AuB tag needs an AuB key");
  PORCHAIN_ENFORCE(block.size() == keys.pk.sectors(), ParameterError,
                   "block has " + std::to_string(block.size()) + " sectors, key expects " +
                       std::to_string(keys.pk.sectors()));
  return (aub_block_hash(index) + keys.pk.u_batch().multi_exp(block)) * keys.sk;
}

G1 tag_block_ppaub(const Scalar& fileid, uint64_t index, const Scalar& block, const OwnerKeys& keys) {
  PORCHAIN_ENFORCE(keys.pk.scheme() == Scheme::kPPAuB, ParameterError,
                   "PPAuB tag needs a PPAuB key");
  return (ppaub_block_hash(fileid, index) + keys.pk.u()[0] * block) * keys.sk;
}

TaggedFile tag_file(ByteView data, const PorParams& params, const OwnerKeys& keys,
                    unsigned threads) {
  PORCHAIN_ENFORCE(params.scheme == keys.pk.scheme(), ParameterError, "scheme does not match key");
  PORCHAIN_ENFORCE(params.scheme == Scheme::kAuB || params.fileid, ParameterError,
                   "PPAuB tagging needs a fileid");
  TaggedFile file;
  file.blocks = chunk_file(data, params);
  file.layout = FileLayout{params.scheme, file.blocks.size(), params.s, params.sector_width_bytes,
                           data.size(),
                           params.scheme == Scheme::kPPAuB ? params.fileid : std::nullopt};
  const size_t n = file.blocks.size();
  file.tags.resize(n);
  file.digests.resize(n);

  auto work = [&](size_t begin, size_t end) {
    for (size_t k = begin; k < end; ++k) {
      const uint64_t index = k + 1;
      file.tags[k] = params.scheme == Scheme::kAuB
                         ? tag_block_aub(index, file.blocks[k], keys)
                         : tag_block_ppaub(*params.fileid, index, file.blocks[k][0], keys);
      file.digests[k] = block_digest(file.blocks[k], file.tags[k]);
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const size_t per = (n + threads - 1) / threads;
    for (size_t b = 0; b < n; b += per) pool.emplace_back(work, b, std::min(n, b + per));
    for (auto& t : pool) t.join();
  }
  return file;
}

Bytes TaggedFile::encode_tags() const {
  ByteWriter w;
  write_header(w, magic::kTagFile);
  write_layout(w, layout);
  for (size_t i = 0; i < tags.size(); ++i) {
    w.field(tags[i].to_compressed());
    w.field(digests[i]);
  }
  return std::move(w).take();
}

Bytes TaggedFile::encode_blocks() const {
  ByteWriter w;
  write_header(w, magic::kBlockFile);
  write_layout(w, layout);
  Bytes sector_bytes(layout.s * layout.sector_width);
  for (const Block& block : blocks) {
    for (size_t j = 0; j < layout.s; ++j) {
      block[j].to_small_be(sector_bytes.data() + j * layout.sector_width, layout.sector_width);
    }
    w.field(sector_bytes);
  }
  return std::move(w).take();
}

TaggedFile TaggedFile::decode(ByteView block_file, ByteView tag_file) {
  TaggedFile file;
  ByteReader br(block_file);
  read_header(br, magic::kBlockFile);
  file.layout = read_layout(br);
  ByteReader tr(tag_file);
  read_header(tr, magic::kTagFile);
  PORCHAIN_ENFORCE(read_layout(tr) == file.layout, FormatError,
                   "block file and tag file describe different layouts");

  const size_t w = file.layout.sector_width;
  const size_t s = file.layout.s;
  PORCHAIN_ENFORCE(file.layout.n <= br.remaining() / (4 + s * w), FormatError,
                   "block count exceeds input");
  file.blocks.reserve(file.layout.n);
  file.tags.reserve(file.layout.n);
  file.digests.reserve(file.layout.n);
  for (uint64_t i = 0; i < file.layout.n; ++i) {
    ByteView raw = br.fixed(s * w);
    Block block;
    block.reserve(s);
    for (size_t j = 0; j < s; ++j) block.push_back(Scalar::from_small_be(raw.subspan(j * w, w)));
    file.blocks.push_back(std::move(block));
    file.tags.push_back(G1::from_compressed(tr.fixed(G1::kEncodedSize)));
    ByteView d = tr.fixed(32);
    Hash32 h;
    std::copy(d.begin(), d.end(), h.begin());
    file.digests.push_back(h);
  }
  br.expect_done();
  tr.expect_done();
  return file;
}

}  // namespace porchain::por
