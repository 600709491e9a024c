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

#include "porchain/ledger/contract.hpp"

#include <nlohmann/json.hpp>

#include "porchain/common/error.hpp"
#include "porchain/crypto/domain.hpp"

namespace porchain::ledger {

uint64_t ContractTerms::effective_privacy_cap() const {
  if (privacy_cap != 0) return privacy_cap;
  return query_size > 1 ? query_size - 1 : 1;
}

void ContractTerms::validate() const {
  PORCHAIN_ENFORCE(audit_count >= 1, ParameterError, "audit_count must be at least 1");
  PORCHAIN_ENFORCE(query_size >= 1, ParameterError, "query size must be at least 1");
  PORCHAIN_ENFORCE(dispute_window >= 1, ParameterError, "dispute window must be at least 1 block");
}

void ContractTerms::write(ByteWriter& w) const {
  w.u64(audit_count);
  w.u64(c_s);
  w.u64(c_a);
  w.u64(deposit_s);
  w.u64(deposit_a);
  w.u64(penalty);
  w.u64(dispute_window);
  w.u64(query_size);
  w.u64(privacy_cap);
}

ContractTerms ContractTerms::read(ByteReader& r) {
  ContractTerms t;
  t.audit_count = r.u64();
  t.c_s = r.u64();
  t.c_a = r.u64();
  t.deposit_s = r.u64();
  t.deposit_a = r.u64();
  t.penalty = r.u64();
  t.dispute_window = r.u64();
  t.query_size = r.u64();
  t.privacy_cap = r.u64();
  return t;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kPaidBoth:
      return "paid_both";
    case Outcome::kPenalizeServer:
      return "penalize_server";
    case Outcome::kPenalizeAuditor:
      return "penalize_auditor";
    case Outcome::kReimbursedOwner:
      return "reimbursed_owner";
    case Outcome::kTerminated:
      return "terminated";
  }
  return "unknown";
}

std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::kOk:
      return "ok";
    case Reason::kUnderAudited:
      return "under_audited";
    case Reason::kBadQuerySignature:
      return "bad_query_signature";
    case Reason::kQueryMismatch:
      return "query_mismatch";
    case Reason::kAggregateFailed:
      return "aggregate_failed";
    case Reason::kMalformedProof:
      return "malformed_proof";
    case Reason::kPrivacyCap:
      return "privacy_cap";
    case Reason::kFalseComplaint:
      return "false_complaint";
    case Reason::kRebuttalValid:
      return "rebuttal_valid";
    case Reason::kRebuttalFailed:
      return "rebuttal_failed";
    case Reason::kRebuttalMalformed:
      return "rebuttal_malformed";
    case Reason::kDisputeTimeout:
      return "dispute_timeout";
    case Reason::kOwnerAbort:
      return "owner_abort";
  }
  return "unknown";
}

std::string_view transfer_kind_name(TransferKind k) {
  switch (k) {
    case TransferKind::kPayment:
      return "payment";
    case TransferKind::kPenalty:
      return "penalty";
    case TransferKind::kRefund:
      return "refund";
  }
  return "unknown";
}

std::string Verdict::to_json_line() const {
  nlohmann::ordered_json j;
  j["channel"] = channel_counter;
  j["channel_id"] = to_hex(channel_id);
  j["height"] = height;
  j["outcome"] = outcome_name(outcome);
  j["reason"] = reason_name(reason);
  auto arr = nlohmann::ordered_json::array();
  for (const Transfer& t : transfers) {
    arr.push_back({{"from", t.from},
                   {"to", t.to},
                   {"amount", t.amount},
                   {"kind", transfer_kind_name(t.kind)}});
  }
  j["transfers"] = std::move(arr);
  j["detail"] = detail;
  return j.dump();
}

Bytes server_digest_message(const std::vector<Hash32>& h) {
  ByteWriter w;
  w.field(domain::kServerDigest);
  w.u32(static_cast<uint32_t>(h.size()));
  for (const Hash32& x : h) w.field(x);
  return std::move(w).take();
}

Bytes owner_countersign_message(const std::vector<Hash32>& h, ByteView server_sig) {
  ByteWriter w;
  w.field(domain::kOwnerCountersign);
  w.u32(static_cast<uint32_t>(h.size()));
  for (const Hash32& x : h) w.field(x);
  w.field(server_sig);
  return std::move(w).take();
}

Bytes ClosePayload::encode() const {
  ByteWriter w;
  w.u8(static_cast<uint8_t>(scheme));
  w.u8(complaint ? 1 : 0);
  w.u32(static_cast<uint32_t>(queries.size()));
  for (const por::Query& q : queries) w.field(q.encode());
  w.field(proof);
  if (fileid) {
    w.field(fileid->to_bytes());
  } else {
    w.field(ByteView{});
  }
  return std::move(w).take();
}

ClosePayload ClosePayload::decode(ByteView bytes) {
  ByteReader r(bytes);
  ClosePayload p;
  p.scheme = por::scheme_from_byte(r.u8());
  uint8_t flag = r.u8();
  PORCHAIN_ENFORCE(flag <= 1, FormatError, "complaint flag must be 0 or 1");
  p.complaint = flag == 1;
  uint32_t k = r.u32();
  PORCHAIN_ENFORCE(k <= r.remaining() / 4, FormatError, "query count exceeds input");
  p.queries.reserve(k);
  for (uint32_t i = 0; i < k; ++i) p.queries.push_back(por::Query::decode(r.field()));
  ByteView proof = r.field();
  p.proof.assign(proof.begin(), proof.end());
  ByteView fid = r.field();
  if (!fid.empty()) p.fileid = por::Scalar::from_canonical(fid);
  r.expect_done();
  return p;
}

}  // namespace porchain::ledger
