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

#include "porchain/ledger/transaction.hpp"

#include "porchain/crypto/domain.hpp"
#include "porchain/crypto/hash.hpp"

namespace porchain::ledger {

std::string_view tx_kind_name(TxKind kind) {
  switch (kind) {
    case TxKind::kRegisterOwner:
      return "register_owner";
    case TxKind::kRegisterServer:
      return "register_server";
    case TxKind::kRegisterAuditor:
      return "register_auditor";
    case TxKind::kReceiveSignedDigest:
      return "receive_signed_digest";
    case TxKind::kPublishCredentials:
      return "publish_credentials";
    case TxKind::kPostDeposit:
      return "post_deposit";
    case TxKind::kOpenChannel:
      return "open_channel";
    case TxKind::kCloseChannel:
      return "close_channel";
    case TxKind::kSubmitRebuttal:
      return "submit_rebuttal";
    case TxKind::kTerminate:
      return "terminate";
  }
  return "unknown";
}

Bytes Transaction::signing_bytes() const {
  ByteWriter w;
  w.field(domain::kLedgerTx);
  w.u8(static_cast<uint8_t>(kind));
  w.field(sender);
  w.u64(seq);
  w.field(payload);
  return std::move(w).take();
}

Bytes Transaction::encode() const {
  ByteWriter w;
  w.u8(static_cast<uint8_t>(kind));
  w.field(sender);
  w.u64(seq);
  w.field(payload);
  w.field(sig);
  return std::move(w).take();
}

Transaction Transaction::decode(ByteView bytes) {
  ByteReader r(bytes);
  Transaction tx;
  tx.kind = static_cast<TxKind>(r.u8());
  tx.sender = r.str();
  tx.seq = r.u64();
  ByteView p = r.field();
  tx.payload.assign(p.begin(), p.end());
  ByteView s = r.field();
  tx.sig.assign(s.begin(), s.end());
  r.expect_done();
  return tx;
}

Hash32 Transaction::hash() const { return crypto::sha256(encode()); }

Transaction make_tx(TxKind kind, const AccountId& sender, uint64_t seq, Bytes payload,
                    const crypto::SigKeypair& key) {
  Transaction tx{kind, sender, seq, std::move(payload), {}};
  tx.sig = crypto::sign(tx.signing_bytes(), key);
  return tx;
}

}  // namespace porchain::ledger
