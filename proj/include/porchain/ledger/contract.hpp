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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "porchain/ledger/transaction.hpp"
#include "porchain/por/keys.hpp"
#include "porchain/por/query.hpp"

namespace porchain::ledger {

using por::Scheme;

struct ContractTerms {
  uint64_t audit_count = 1;  // minimum queries per channel
  uint64_t c_s = 0;          // fee for an honest server
  uint64_t c_a = 0;          // fee for an honest auditor
  uint64_t deposit_s = 0;    // server channel stake
  uint64_t deposit_a = 0;    // auditor channel stake
  uint64_t penalty = 0;      // taken from the offender's stake; 0 means the whole stake
  uint64_t dispute_window = 1;  // blocks
  uint64_t query_size = 1;      // l, indices per query
  uint64_t privacy_cap = 0;     // AuB queries a server answers per channel; 0 means l - 1

  uint64_t effective_privacy_cap() const;
  // Throws ParameterError on audit_count = 0, query_size = 0 or a zero
  // dispute window.
  void validate() const;
  void write(ByteWriter& w) const;
  static ContractTerms read(ByteReader& r);
  bool operator==(const ContractTerms&) const = default;
};

enum class Outcome : uint8_t {
  kPaidBoth = 1,
  kPenalizeServer = 2,
  kPenalizeAuditor = 3,
  kReimbursedOwner = 4,
  kTerminated = 5,
};

enum class Reason : uint8_t {
  kOk = 1,
  kUnderAudited,
  kBadQuerySignature,
  kQueryMismatch,
  kAggregateFailed,
  kMalformedProof,
  kPrivacyCap,
  kFalseComplaint,
  kRebuttalValid,
  kRebuttalFailed,
  kRebuttalMalformed,
  kDisputeTimeout,
  kOwnerAbort,
};

std::string_view outcome_name(Outcome o);
std::string_view reason_name(Reason r);

enum class TransferKind : uint8_t { kPayment = 1, kPenalty = 2, kRefund = 3 };
std::string_view transfer_kind_name(TransferKind k);

// Escrow buckets are named "escrow/<purpose>"; everything else is an account.
namespace bucket {
inline constexpr std::string_view kOwnerEscrow = "escrow/owner";
inline constexpr std::string_view kFrozen = "escrow/frozen";
inline constexpr std::string_view kServerDeposit = "escrow/deposit-server";
inline constexpr std::string_view kAuditorDeposit = "escrow/deposit-auditor";
}  // namespace bucket

struct Transfer {
  std::string from;
  std::string to;
  uint64_t amount = 0;
  TransferKind kind = TransferKind::kPayment;
  bool operator==(const Transfer&) const = default;
};

struct Verdict {
  uint64_t channel_counter = 0;
  Hash32 channel_id{};
  uint64_t height = 0;
  Outcome outcome = Outcome::kPaidBoth;
  Reason reason = Reason::kOk;
  std::vector<Transfer> transfers;
  std::string detail;

  // One JSON object; no trailing newline.
  std::string to_json_line() const;
};

// Signed digest anchoring: the server signs the h list, the owner
// countersigns (h list, server signature).
Bytes server_digest_message(const std::vector<Hash32>& h);
Bytes owner_countersign_message(const std::vector<Hash32>& h, ByteView server_sig);

// CloseChannel payload. Its encoding is the byte-exact contract call.
struct ClosePayload {
  Scheme scheme = Scheme::kAuB;
  bool complaint = false;
  std::vector<por::Query> queries;  // Q', auditor-signed
  Bytes proof;                      // aggregate proof bytes; may be empty on complaint
  std::optional<por::Scalar> fileid;

  Bytes encode() const;
  static ClosePayload decode(ByteView bytes);
};

enum class ChannelStatus : uint8_t { kNone = 0, kOpen = 1, kDisputed = 2, kClosed = 3 };

struct Dispute {
  AccountId complainant;
  por::Query last_query;
  uint64_t deadline = 0;  // last height at which a rebuttal is accepted
  std::optional<Bytes> rebuttal;
};

struct ChannelRecord {
  ChannelStatus status = ChannelStatus::kNone;
  uint64_t counter = 0;  // channels opened so far
  Hash32 channel_id{};
  std::optional<Hash32> h_b;
  uint64_t nonce_floor = 0;
  uint64_t opened_at = 0;
  std::optional<Dispute> dispute;
};

struct AnchoredDigest {
  std::vector<Hash32> h;
  Bytes server_sig;
  Bytes owner_sig;
};

// Read-only snapshot of contract storage.
struct ContractState {
  std::optional<AccountId> owner_id;
  Bytes pk_o;
  ContractTerms terms;
  std::optional<AccountId> server_id;
  Bytes pk_s;
  std::optional<AccountId> auditor_id;
  Bytes pk_a;
  std::optional<AnchoredDigest> digest;
  Bytes credentials;  // encoded PublicKey, empty until published
  std::optional<por::Scalar> fileid;
  ChannelRecord channel;
  bool terminated = false;
};

}  // namespace porchain::ledger
