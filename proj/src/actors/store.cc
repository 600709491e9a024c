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

#include "porchain/actors/store.hpp"

#include "porchain/common/error.hpp"
#include "porchain/common/format.hpp"

namespace porchain::actors {

namespace {

void write_atomic(const std::filesystem::path& path, ByteView data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  write_file(tmp, data);
  std::filesystem::rename(tmp, path);
}

}  // namespace

ServerStore::ServerStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

void ServerStore::save(const por::TaggedFile& file) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  PORCHAIN_ENFORCE(!ec, IoError, "cannot create store directory " + dir_.string());
  write_atomic(blocks_path(), file.encode_blocks());
  write_atomic(tags_path(), file.encode_tags());
}

bool ServerStore::exists() const {
  return std::filesystem::exists(blocks_path()) && std::filesystem::exists(tags_path());
}

por::TaggedFile ServerStore::load() const {
  PORCHAIN_ENFORCE(exists(), IoError, "no stored file in " + dir_.string());
  return por::TaggedFile::decode(read_file(blocks_path()), read_file(tags_path()));
}

void ServerStore::clear() const {
  std::filesystem::remove(blocks_path());
  std::filesystem::remove(tags_path());
}

}  // namespace porchain::actors
