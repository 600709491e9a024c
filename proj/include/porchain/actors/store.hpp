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

#include <filesystem>
#include <memory>

#include "porchain/por/file.hpp"

namespace porchain::actors {

// Server-side persistent copy of the outsourced file: blocks.bin holds the
// layout and sectors, tags.bin the layout, tags and digests.
class ServerStore {
 public:
  explicit ServerStore(std::filesystem::path dir);

  void save(const por::TaggedFile& file) const;
  bool exists() const;
  // Throws IoError if nothing is stored, FormatError on corrupt files.
  por::TaggedFile load() const;
  void clear() const;

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path blocks_path() const { return dir_ / "blocks.bin"; }
  std::filesystem::path tags_path() const { return dir_ / "tags.bin"; }

 private:
  std::filesystem::path dir_;
};

}  // namespace porchain::actors
