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

#include "porchain/common/format.hpp"

#include <fstream>
#include <iterator>

#include "porchain/common/error.hpp"

namespace porchain {

void write_header(ByteWriter& w, std::string_view magic4) {
  w.raw(as_bytes(magic4));
  const uint8_t version = kFormatVersion;
  w.raw(ByteView(&version, 1));
}

void read_header(ByteReader& r, std::string_view magic4) {
  ByteView m = r.raw(magic4.size());
  PORCHAIN_ENFORCE(std::equal(m.begin(), m.end(), magic4.begin()), FormatError,
                   "bad magic, expected " + std::string(magic4));
  uint8_t version = r.raw(1)[0];
  PORCHAIN_ENFORCE(version == kFormatVersion, FormatError,
                   "unsupported format version " + std::to_string(version));
}

void write_file(const std::filesystem::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  PORCHAIN_ENFORCE(out.good(), IoError, "cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  PORCHAIN_ENFORCE(out.good(), IoError, "write failed: " + path.string());
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  PORCHAIN_ENFORCE(in.good(), IoError, "cannot open for reading: " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace porchain
