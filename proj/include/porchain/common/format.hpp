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
#include <string_view>

#include "porchain/common/bytes.hpp"

namespace porchain {

// Every persisted file starts with a 4-byte ASCII magic and a 1-byte version.
inline constexpr uint8_t kFormatVersion = 1;

namespace magic {
inline constexpr std::string_view kPublicKey = "PCPK";
inline constexpr std::string_view kSecretKey = "PCSK";
inline constexpr std::string_view kTagFile = "PCTG";
inline constexpr std::string_view kBlockFile = "PCBK";
inline constexpr std::string_view kTxLog = "PCTX";
}  // namespace magic

void write_header(ByteWriter& w, std::string_view magic4);
// Throws FormatError on a wrong magic or unsupported version.
void read_header(ByteReader& r, std::string_view magic4);

void write_file(const std::filesystem::path& path, ByteView data);
Bytes read_file(const std::filesystem::path& path);

}  // namespace porchain
