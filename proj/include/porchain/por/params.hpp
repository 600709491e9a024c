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

#include <cstdint>
#include <optional>
#include <string_view>

#include "porchain/crypto/group.hpp"
#include "porchain/crypto/scalar.hpp"

namespace porchain::por {

using crypto::Scalar;

enum class Scheme : uint8_t {
  kAuB = 1,    // Shacham-Waters authenticators with sectors
  kPPAuB = 2,  // random-masked, privacy preserving
};

std::string_view scheme_name(Scheme scheme);
// Accepts "aub" / "ppaub" (case-insensitive). Throws ParameterError.
Scheme parse_scheme(std::string_view name);
Scheme scheme_from_byte(uint8_t b);

// Widest sector whose every value is below p: floor((bits(p) - 1) / 8).
constexpr size_t sector_width_for(const crypto::PairingSuite& suite) {
  return (suite.scalar_bits - 1) / 8;
}
inline size_t default_sector_width() { return sector_width_for(crypto::PairingSuite::bls12_381()); }

inline constexpr size_t kDefaultAubSectors = 1000;

struct PorParams {
  Scheme scheme = Scheme::kAuB;
  uint64_t n = 0;  // block count; derived from the file length by chunking
  size_t s = 1;    // sectors per block; PPAuB always 1
  size_t sector_width_bytes = default_sector_width();
  uint64_t l = 1;  // indices per query
  std::optional<Scalar> fileid;

  static PorParams aub(size_t sectors = kDefaultAubSectors);
  static PorParams ppaub();

  size_t block_bytes() const { return s * sector_width_bytes; }
  // Throws ParameterError on s = 0, PPAuB with s != 1, or a sector width
  // that could overflow the field.
  void validate() const;
};

// ceil(byte_len / (s * width)); zero for an empty input.
uint64_t block_count(uint64_t byte_len, size_t s, size_t width);

}  // namespace porchain::por
