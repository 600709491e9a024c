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

#include <string_view>

// Domain separation tags. Each hash oracle, sampler stream and signed
// message family uses exactly one of these, so outputs of one purpose can
// never be replayed as another.
namespace porchain::domain {

inline constexpr std::string_view kAubBlockHash = "AUB/H";
inline constexpr std::string_view kAubGenerator = "AUB/U";
inline constexpr std::string_view kPpaubBlockHash = "PPAUB/H1";
inline constexpr std::string_view kPpaubGtHash = "PPAUB/H2";
inline constexpr std::string_view kPpaubGenerator = "PPAUB/U";

inline constexpr std::string_view kQueryIndices = "QUERY/IDX";
inline constexpr std::string_view kQueryCoefficients = "QUERY/COEF";
inline constexpr std::string_view kQuerySession = "QUERY/SEQ";

inline constexpr std::string_view kChannelMessage = "CHAN/MSG";
inline constexpr std::string_view kChannelQuery = "CHAN/QUERY";
inline constexpr std::string_view kChannelId = "CHAN/ID";

inline constexpr std::string_view kServerDigest = "DIGEST/SERVER";
inline constexpr std::string_view kOwnerCountersign = "DIGEST/OWNER";
inline constexpr std::string_view kLedgerTx = "LEDGER/TX";

}  // namespace porchain::domain
