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

#include "porchain/por/params.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "porchain/common/error.hpp"

namespace porchain::por {

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kAuB:
      return "aub";
    case Scheme::kPPAuB:
      return "ppaub";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "aub") return Scheme::kAuB;
  if (lower == "ppaub") return Scheme::kPPAuB;
  throw ParameterError("unknown scheme: " + std::string(name));
}

Scheme scheme_from_byte(uint8_t b) {
  PORCHAIN_ENFORCE(b == 1 || b == 2, FormatError, "unknown scheme id " + std::to_string(b));
  return static_cast<Scheme>(b);
}

PorParams PorParams::aub(size_t sectors) {
  PorParams p;
  p.scheme = Scheme::kAuB;
  p.s = sectors;
  return p;
}

PorParams PorParams::ppaub() {
  PorParams p;
  p.scheme = Scheme::kPPAuB;
  p.s = 1;
  return p;
}

void PorParams::validate() const {
  PORCHAIN_ENFORCE(s >= 1, ParameterError, "sectors per block must be at least 1");
  PORCHAIN_ENFORCE(scheme != Scheme::kPPAuB || s == 1, ParameterError,
                   "PPAuB uses exactly one sector per block");
  PORCHAIN_ENFORCE(sector_width_bytes >= 1 && sector_width_bytes <= default_sector_width(),
                   ParameterError,
                   "sector width must be between 1 and " + std::to_string(default_sector_width()));
  PORCHAIN_ENFORCE(l >= 1, ParameterError, "query size must be at least 1");
}

uint64_t block_count(uint64_t byte_len, size_t s, size_t width) {
  PORCHAIN_ENFORCE(s >= 1 && width >= 1, ParameterError, "block geometry must be positive");
  const uint64_t per_block = static_cast<uint64_t>(s) * width;
  return (byte_len + per_block - 1) / per_block;
}

}  // namespace porchain::por
