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

#include <array>
#include <initializer_list>
#include <string_view>

#include "porchain/common/bytes.hpp"

namespace porchain::crypto {

Hash32 sha256(ByteView data);
// SHA-256 over the concatenation of `parts` (no framing).
Hash32 sha256_concat(std::initializer_list<ByteView> parts);
std::array<uint8_t, 64> sha512(ByteView data);

// SHA-256 over lp(tag) || data, for domain-separated commitments.
Hash32 tagged_hash(std::string_view tag, ByteView data);

}  // namespace porchain::crypto
