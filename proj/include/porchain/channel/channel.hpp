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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "porchain/crypto/signature.hpp"
#include "porchain/crypto/xof.hpp"
#include "porchain/ledger/contract.hpp"
#include "porchain/por/file.hpp"
#include "porchain/por/verify.hpp"

namespace porchain::channel {

using por::Scheme;

enum class MsgKind : uint8_t { kQuery = 1, kResponse = 2, kAck = 3, kComplaintNotice = 4 };
std::string_view msg_kind_name(MsgKind kind);

// Wire message. The signature covers
// lp("CHAN/MSG") lp(channel_id) lp(nonce) lp(kind) lp(payload).
struct ChannelMsg {
  Hash32 channel_id{};
  uint64_t nonce = 0;
  MsgKind kind = MsgKind::kQuery;
  Bytes payload;
  Bytes sig;

  Bytes signing_bytes() const;
  // lp(channel_id) lp(nonce) lp(kind) lp(payload) lp(sig)
  Bytes encode() const;
  static ChannelMsg decode(ByteView bytes);
};

ChannelMsg make_msg(const Hash32& channel_id, uint64_t nonce, MsgKind kind, Bytes payload,
                    const crypto::SigKeypair& key);
bool verify_msg(const ChannelMsg& msg, ByteView verify_key);

// Response payload: lp(seq) lp(proof bytes).
Bytes encode_response_payload(uint64_t seq, const por::PorResponse& resp);

struct ChannelParams {
  Scheme scheme = Scheme::kAuB;
  Hash32 channel_id{};
  Hash32 seed{};  // h_b
  uint64_t nonce_floor = 0;
  uint64_t n = 0;
  uint64_t l = 1;
  uint64_t audit_count = 1;
  uint64_t max_queries = 0;  // AuB server cap; 0 means l - 1
  std::optional<por::Scalar> fileid;

  uint64_t effective_cap() const { return max_queries != 0 ? max_queries : (l > 1 ? l - 1 : 1); }
};

// Derives channel parameters from the ledger contract at channel open.
ChannelParams params_from_contract(const ledger::ContractState& c, Scheme scheme);

enum class ComplaintReason : uint8_t {
  kNone = 0,
  kNonce,
  kSignature,
  kWrongChannel,
  kWrongKind,
  kQueryMismatch,
  kPrivacyCap,
  kMalformed,
  kVerifyFailed,
};
std::string_view complaint_reason_name(ComplaintReason r);

ledger::ClosePayload build_close_payload(Scheme scheme, bool complaint,
                                         const std::vector<por::Query>& queries,
                                         const std::optional<por::Accumulator>& acc,
                                         const std::optional<por::Scalar>& fileid);

struct AuditorOptions {
  bool ignore_failures = false;                             // keep folding failed responses
  std::function<void(por::Query&)> query_filter;            // applied before signing
  std::function<void(por::PorResponse&)> record_filter;     // applied to what gets recorded
};

class AuditorChannel {
 public:
  enum class Decision { kContinue, kCloseOk, kCloseComplaint };

  AuditorChannel(ChannelParams params, crypto::SigKeypair key, Bytes server_vk,
                 std::shared_ptr<const por::PublicKey> pk, AuditorOptions options = {});

  // Signed query for seq = queries_sent. Throws ProtocolError while a
  // response is pending or after a terminal decision.
  ChannelMsg next_query();
  Decision accept(const ChannelMsg& msg);

  ledger::ClosePayload build_close_payload() const;

  const ChannelParams& params() const { return params_; }
  const std::vector<por::Query>& sent_queries() const { return queries_; }
  const por::Accumulator& accumulator() const { return acc_; }
  const std::vector<por::PorResponse>& accepted() const { return accepted_; }
  uint64_t queries_sent() const { return queries_.size(); }
  ComplaintReason complaint() const { return complaint_; }
  std::optional<Decision> decision() const { return decision_; }
  // Verification of each accepted response in order (AuB per response,
  // PPAuB on the running aggregate).
  const std::vector<por::VerifyStatus>& checks() const { return checks_; }

 private:
  Decision fail(ComplaintReason why);

  ChannelParams params_;
  crypto::SigKeypair key_;
  Bytes server_vk_;
  std::shared_ptr<const por::PublicKey> pk_;
  AuditorOptions options_;
  std::vector<por::Query> queries_;
  std::vector<por::PorResponse> accepted_;
  std::vector<por::VerifyStatus> checks_;
  por::Accumulator acc_;
  bool pending_ = false;
  ComplaintReason complaint_ = ComplaintReason::kNone;
  std::optional<Decision> decision_;
};

struct ServerOptions {
  bool accept_any_query = false;  // skip regeneration and cap checks (collusion)
};

class ServerChannel {
 public:
  struct Reply {
    std::optional<ChannelMsg> response;
    ComplaintReason complaint = ComplaintReason::kNone;
  };

  ServerChannel(ChannelParams params, crypto::SigKeypair key, Bytes auditor_vk,
                std::shared_ptr<const por::TaggedFile> file,
                std::shared_ptr<const por::PublicKey> pk, crypto::XofSampler rng,
                ServerOptions options = {});

  // Validates nonce, channel, signatures, regeneration and the AuB cap,
  // then answers. Every failure becomes a complaint, never an exception.
  Reply handle(const ChannelMsg& msg);

  // Complaint payload over every query received so far, including the one
  // that triggered the complaint.
  ledger::ClosePayload complaint_payload() const;
  // Proof for the disputed last query; PPAuB carries mu = r + gamma X.
  Bytes rebuttal(const por::Query& last);

  const ChannelParams& params() const { return params_; }
  uint64_t queries_answered() const { return answered_; }
  uint64_t nonce_expected() const { return nonce_expected_; }
  const std::vector<por::Query>& received() const { return received_; }
  ComplaintReason complaint() const { return complaint_; }

 private:
  Reply fail(ComplaintReason why);

  ChannelParams params_;
  crypto::SigKeypair key_;
  Bytes auditor_vk_;
  std::shared_ptr<const por::TaggedFile> file_;
  std::shared_ptr<const por::PublicKey> pk_;
  crypto::XofSampler rng_;
  ServerOptions options_;
  uint64_t nonce_expected_;
  uint64_t answered_ = 0;
  std::optional<por::Scalar> r_;
  std::vector<por::Query> received_;
  ComplaintReason complaint_ = ComplaintReason::kNone;
};

}  // namespace porchain::channel
