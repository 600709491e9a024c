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

#include "porchain/channel/channel.hpp"

#include "porchain/common/error.hpp"
#include "porchain/crypto/domain.hpp"

namespace porchain::channel {

std::string_view msg_kind_name(MsgKind kind) {
  switch (kind) {
    case MsgKind::kQuery:
      return "query";
    case MsgKind::kResponse:
      return "response";
    case MsgKind::kAck:
      return "ack";
    case MsgKind::kComplaintNotice:
      return "complaint_notice";
  }
  return "unknown";
}

std::string_view complaint_reason_name(ComplaintReason r) {
  switch (r) {
    case ComplaintReason::kNone:
      return "none";
    case ComplaintReason::kNonce:
      return "nonce";
    case ComplaintReason::kSignature:
      return "signature";
    case ComplaintReason::kWrongChannel:
      return "wrong_channel";
    case ComplaintReason::kWrongKind:
      return "wrong_kind";
    case ComplaintReason::kQueryMismatch:
      return "query_mismatch";
    case ComplaintReason::kPrivacyCap:
      return "privacy cap";
    case ComplaintReason::kMalformed:
      return "malformed";
    case ComplaintReason::kVerifyFailed:
      return "verify_failed";
  }
  return "unknown";
}

Bytes ChannelMsg::signing_bytes() const {
  ByteWriter w;
  w.field(domain::kChannelMessage);
  w.field(channel_id);
  w.u64(nonce);
  w.u8(static_cast<uint8_t>(kind));
  w.field(payload);
  return std::move(w).take();
}

Bytes ChannelMsg::encode() const {
  ByteWriter w;
  w.field(channel_id);
  w.u64(nonce);
  w.u8(static_cast<uint8_t>(kind));
  w.field(payload);
  w.field(sig);
  return std::move(w).take();
}

ChannelMsg ChannelMsg::decode(ByteView bytes) {
  ByteReader r(bytes);
  ChannelMsg m;
  ByteView id = r.fixed(32);
  std::copy(id.begin(), id.end(), m.channel_id.begin());
  m.nonce = r.u64();
  uint8_t kind = r.u8();
  PORCHAIN_ENFORCE(kind >= 1 && kind <= 4, FormatError, "unknown message kind");
  m.kind = static_cast<MsgKind>(kind);
  ByteView p = r.field();
  m.payload.assign(p.begin(), p.end());
  ByteView s = r.field();
  m.sig.assign(s.begin(), s.end());
  r.expect_done();
  return m;
}

ChannelMsg make_msg(const Hash32& channel_id, uint64_t nonce, MsgKind kind, Bytes payload,
                    const crypto::SigKeypair& key) {
  ChannelMsg m{channel_id, nonce, kind, std::move(payload), {}};
  m.sig = crypto::sign(m.signing_bytes(), key);
  return m;
}

bool verify_msg(const ChannelMsg& msg, ByteView verify_key) {
  return crypto::sig_verify(msg.signing_bytes(), msg.sig, verify_key);
}

Bytes encode_response_payload(uint64_t seq, const por::PorResponse& resp) {
  ByteWriter w;
  w.u64(seq);
  w.field(resp.encode_proof());
  return std::move(w).take();
}

ChannelParams params_from_contract(const ledger::ContractState& c, Scheme scheme) {
  PORCHAIN_ENFORCE(c.channel.status == ledger::ChannelStatus::kOpen && c.channel.h_b && c.digest,
                   ProtocolError, "channel is not open");
  ChannelParams p;
  p.scheme = scheme;
  p.channel_id = c.channel.channel_id;
  p.seed = *c.channel.h_b;
  p.nonce_floor = c.channel.nonce_floor;
  p.n = c.digest->h.size();
  p.l = c.terms.query_size;
  p.audit_count = c.terms.audit_count;
  p.max_queries = c.terms.effective_privacy_cap();
  p.fileid = c.fileid;
  return p;
}

ledger::ClosePayload build_close_payload(Scheme scheme, bool complaint,
                                         const std::vector<por::Query>& queries,
                                         const std::optional<por::Accumulator>& acc,
                                         const std::optional<por::Scalar>& fileid) {
  ledger::ClosePayload p;
  p.scheme = scheme;
  p.complaint = complaint;
  p.queries = queries;
  if (acc) p.proof = acc->as_response().encode_proof();
  if (scheme == Scheme::kPPAuB) p.fileid = fileid;
  return p;
}

// --- auditor -------------------------------------------------------------

AuditorChannel::AuditorChannel(ChannelParams params, crypto::SigKeypair key, Bytes server_vk,
                               std::shared_ptr<const por::PublicKey> pk, AuditorOptions options)
    : params_(std::move(params)),
      key_(std::move(key)),
      server_vk_(std::move(server_vk)),
      pk_(std::move(pk)),
      options_(std::move(options)),
      acc_(por::Accumulator::empty(params_.scheme, pk_->sectors())) {
  PORCHAIN_ENFORCE(pk_->scheme() == params_.scheme, ParameterError, "key scheme mismatch");
}

ChannelMsg AuditorChannel::next_query() {
  PORCHAIN_ENFORCE(!decision_ || *decision_ == Decision::kContinue, ProtocolError,
                   "channel reached a terminal decision");
  PORCHAIN_ENFORCE(!pending_, ProtocolError, "previous response still pending");
  const uint64_t seq = queries_.size();
  por::Query q = por::gen_query(params_.seed, params_.n, params_.l, seq);
  if (options_.query_filter) options_.query_filter(q);
  q.sig = crypto::sign(q.signing_bytes(params_.channel_id), key_);
  queries_.push_back(q);
  pending_ = true;
  return make_msg(params_.channel_id, params_.nonce_floor + 2 * seq, MsgKind::kQuery, q.encode(),
                  key_);
}

AuditorChannel::Decision AuditorChannel::fail(ComplaintReason why) {
  complaint_ = why;
  decision_ = Decision::kCloseComplaint;
  pending_ = false;
  return *decision_;
}

AuditorChannel::Decision AuditorChannel::accept(const ChannelMsg& msg) {
  PORCHAIN_ENFORCE(pending_, ProtocolError, "no query awaiting a response");
  const uint64_t seq = queries_.size() - 1;
  if (msg.channel_id != params_.channel_id) return fail(ComplaintReason::kWrongChannel);
  if (msg.kind != MsgKind::kResponse) return fail(ComplaintReason::kWrongKind);
  if (msg.nonce != params_.nonce_floor + 2 * seq + 1) return fail(ComplaintReason::kNonce);
  if (!verify_msg(msg, server_vk_)) return fail(ComplaintReason::kSignature);

  por::PorResponse resp;
  try {
    ByteReader r(msg.payload);
    PORCHAIN_ENFORCE(r.u64() == seq, FormatError, "response answers a different query");
    resp = por::PorResponse::decode_proof(r.field(), params_.scheme, pk_->sectors());
    r.expect_done();
  } catch (const FormatError&) {
    return fail(ComplaintReason::kMalformed);
  }
  resp.server_sig = msg.sig;
  if (options_.record_filter) options_.record_filter(resp);
  const por::Query& q = queries_.back();

  por::VerifyStatus st;
  if (params_.scheme == Scheme::kAuB) {
    st = por::verify_response(q.entries, resp, *pk_, params_.fileid);
    if (st == por::VerifyStatus::kValid || options_.ignore_failures) {
      acc_ = por::aggregate(std::move(acc_), q, resp);
    }
  } else {
    try {
      por::Accumulator next = por::aggregate(acc_, q, resp);
      st = por::verify_accumulator(next, *pk_, params_.fileid);
      if (st == por::VerifyStatus::kValid || options_.ignore_failures) acc_ = std::move(next);
    } catch (const ParameterError&) {
      st = por::VerifyStatus::kMalformed;
    }
  }
  checks_.push_back(st);
  if (st != por::VerifyStatus::kValid && !options_.ignore_failures) {
    return fail(st == por::VerifyStatus::kMalformed ? ComplaintReason::kMalformed
                                                     : ComplaintReason::kVerifyFailed);
  }
  accepted_.push_back(resp);
  pending_ = false;
  decision_ = queries_.size() >= params_.audit_count ? Decision::kCloseOk : Decision::kContinue;
  return *decision_;
}

ledger::ClosePayload AuditorChannel::build_close_payload() const {
  const bool complaint = decision_ == Decision::kCloseComplaint;
  return channel::build_close_payload(params_.scheme, complaint, queries_,
                                      complaint ? std::nullopt : std::optional(acc_),
                                      params_.fileid);
}

// --- server --------------------------------------------------------------

ServerChannel::ServerChannel(ChannelParams params, crypto::SigKeypair key, Bytes auditor_vk,
                             std::shared_ptr<const por::TaggedFile> file,
                             std::shared_ptr<const por::PublicKey> pk, crypto::XofSampler rng,
                             ServerOptions options)
    : params_(std::move(params)),
      key_(std::move(key)),
      auditor_vk_(std::move(auditor_vk)),
      file_(std::move(file)),
      pk_(std::move(pk)),
      rng_(std::move(rng)),
      options_(options),
      nonce_expected_(params_.nonce_floor) {}

ServerChannel::Reply ServerChannel::fail(ComplaintReason why) {
  complaint_ = why;
  return Reply{std::nullopt, why};
}

ServerChannel::Reply ServerChannel::handle(const ChannelMsg& msg) {
  if (complaint_ != ComplaintReason::kNone) return Reply{std::nullopt, complaint_};
  if (msg.channel_id != params_.channel_id) return fail(ComplaintReason::kWrongChannel);
  if (msg.kind != MsgKind::kQuery) return fail(ComplaintReason::kWrongKind);

  por::Query q;
  try {
    q = por::Query::decode(msg.payload);
  } catch (const FormatError&) {
    return fail(ComplaintReason::kMalformed);
  }
  received_.push_back(q);
  if (msg.nonce != nonce_expected_) return fail(ComplaintReason::kNonce);
  if (!verify_msg(msg, auditor_vk_) ||
      !crypto::sig_verify(q.signing_bytes(params_.channel_id), q.sig, auditor_vk_)) {
    return fail(ComplaintReason::kSignature);
  }
  if (!options_.accept_any_query) {
    const por::Query expect = por::gen_query(params_.seed, params_.n, params_.l, answered_);
    if (!expect.same_challenge(q)) return fail(ComplaintReason::kQueryMismatch);
    if (params_.scheme == Scheme::kAuB && answered_ >= params_.effective_cap()) {
      return fail(ComplaintReason::kPrivacyCap);
    }
  }

  por::PorResponse resp;
  try {
    if (params_.scheme == Scheme::kAuB) {
      resp = por::gen_response_aub(q, *file_);
    } else {
      const bool first = !r_.has_value();
      por::PpaubProof p = por::gen_response_ppaub(q, *file_, *pk_, first, r_, rng_);
      r_ = p.r;
      resp = std::move(p.response);
    }
  } catch (const ParameterError&) {
    return fail(ComplaintReason::kMalformed);
  }
  ++answered_;
  nonce_expected_ += 2;
  ChannelMsg out = make_msg(params_.channel_id, msg.nonce + 1, MsgKind::kResponse,
                            encode_response_payload(q.seq, resp), key_);
  return Reply{std::move(out), ComplaintReason::kNone};
}

ledger::ClosePayload ServerChannel::complaint_payload() const {
  return channel::build_close_payload(params_.scheme, true, received_, std::nullopt,
                                      params_.fileid);
}

Bytes ServerChannel::rebuttal(const por::Query& last) {
  if (params_.scheme == Scheme::kAuB) return por::gen_response_aub(last, *file_).encode_proof();
  if (!r_) {
    return por::gen_response_ppaub(last, *file_, *pk_, true, std::nullopt, rng_)
        .response.encode_proof();
  }
  por::PpaubProof p = por::gen_response_ppaub(last, *file_, *pk_, false, r_, rng_);
  p.response.mu[0] += *r_;
  return p.response.encode_proof();
}

}  // namespace porchain::channel
