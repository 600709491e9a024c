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

#include <string>

#include "porchain/common/bytes.hpp"
#include "porchain/crypto/signature.hpp"

namespace porchain::ledger {

using AccountId = std::string;

enum class TxKind : uint8_t {
  kRegisterOwner = 1,
  kRegisterServer = 2,
  kRegisterAuditor = 3,
  kReceiveSignedDigest = 4,
  kPublishCredentials = 5,
  kPostDeposit = 6,
  kOpenChannel = 7,
  kCloseChannel = 8,
  kSubmitRebuttal = 9,
  kTerminate = 10,
};

std::string_view tx_kind_name(TxKind kind);

// A signed ledger transaction. `seq` is the sender's account sequence
// number and must equal the ledger's expected value, which blocks replays.
struct Transaction {
  TxKind kind = TxKind::kRegisterOwner;
  AccountId sender;
  uint64_t seq = 0;
  Bytes payload;
  Bytes sig;

  // lp("LEDGER/TX") lp(kind) lp(sender) lp(seq) lp(payload)
  Bytes signing_bytes() const;
  Bytes encode() const;
  static Transaction decode(ByteView bytes);
  Hash32 hash() const;
};

Transaction make_tx(TxKind kind, const AccountId& sender, uint64_t seq, Bytes payload,
                    const crypto::SigKeypair& key);

}  // namespace porchain::ledger
