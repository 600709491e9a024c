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

#include "porchain/actors/actors.hpp"

#include <chrono>
#include <nlohmann/json.hpp>

#include "porchain/common/error.hpp"

namespace porchain::actors {

using nlohmann::ordered_json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Bytes digest_payload(const DigestAck& ack, ByteView owner_sig) {
  ByteWriter w;
  w.u32(static_cast<uint32_t>(ack.h.size()));
  for (const Hash32& h : ack.h) w.field(h);
  w.field(ack.server_sig);
  w.field(owner_sig);
  return std::move(w).take();
}

}  // namespace

// --- EventLog --------------------------------------------------------------

void EventLog::phase(std::string_view name, std::string_view detail) {
  ordered_json j{{"event", "phase"}, {"phase", name}};
  if (!detail.empty()) j["detail"] = detail;
  lines_.push_back(j.dump());
}

void EventLog::tx(const ledger::Transaction& tx, bool accepted, std::string_view error) {
  ordered_json j{{"event", "tx"},
                 {"kind", ledger::tx_kind_name(tx.kind)},
                 {"sender", tx.sender},
                 {"seq", tx.seq},
                 {"accepted", accepted},
                 {"bytes", tx.payload.size()}};
  if (!accepted) j["error"] = error;
  lines_.push_back(j.dump());
}

void EventLog::msg(std::string_view from, const channel::ChannelMsg& m) {
  lines_.push_back(ordered_json{{"event", "msg"},
                                {"from", from},
                                {"kind", channel::msg_kind_name(m.kind)},
                                {"nonce", m.nonce},
                                {"bytes", m.encode().size()}}
                       .dump());
}

void EventLog::complaint(std::string_view by, channel::ComplaintReason reason, uint64_t last_seq) {
  lines_.push_back(ordered_json{{"event", "complaint"},
                                {"by", by},
                                {"reason", channel::complaint_reason_name(reason)},
                                {"last_seq", last_seq}}
                       .dump());
}

void EventLog::verdict(const ledger::Verdict& v) {
  ordered_json j = ordered_json::parse(v.to_json_line());
  ordered_json out{{"event", "verdict"}};
  for (auto& [k, val] : j.items()) out[k] = val;
  lines_.push_back(out.dump());
}

void EventLog::balances(std::string_view label, const std::map<std::string, uint64_t>& b) {
  ordered_json bal = ordered_json::object();
  uint64_t total = 0;
  for (const auto& [id, v] : b) {
    bal[id] = v;
    total += v;
  }
  lines_.push_back(
      ordered_json{{"event", "balances"}, {"label", label}, {"total", total}, {"accounts", bal}}
          .dump());
}

void EventLog::fetch(bool byte_identical, const std::vector<uint64_t>& mismatches) {
  lines_.push_back(ordered_json{{"event", "fetch"},
                                {"byte_identical", byte_identical},
                                {"mismatches", mismatches}}
                       .dump());
}

void EventLog::assertion(std::string_view name, bool passed, std::string_view detail) {
  lines_.push_back(
      ordered_json{{"event", "assertion"}, {"name", name}, {"passed", passed}, {"detail", detail}}
          .dump());
}

void EventLog::note(std::string_view key, std::string_view value) {
  lines_.push_back(ordered_json{{"event", "note"}, {"key", key}, {"value", value}}.dump());
}

void EventLog::number(std::string_view key, double value) {
  lines_.push_back(ordered_json{{"event", "note"}, {"key", key}, {"value", value}}.dump());
}

std::string EventLog::jsonl() const {
  std::string out;
  for (const std::string& l : lines_) {
    out += l;
    out += '\n';
  }
  return out;
}

// --- Party -----------------------------------------------------------------

Party::Party(AccountId id, crypto::SigKeypair key, ledger::Ledger& ledger, EventLog* log)
    : id_(std::move(id)), key_(std::move(key)), ledger_(ledger), log_(log) {}

ledger::Receipt Party::submit(ledger::TxKind kind, Bytes payload) {
  ledger::Transaction tx =
      ledger::make_tx(kind, id_, ledger_.next_seq(id_), std::move(payload), key_);
  try {
    ledger::Receipt r = ledger_.submit(tx);
    if (log_) {
      log_->tx(tx, true, {});
      if (r.verdict) log_->verdict(*r.verdict);
    }
    return r;
  } catch (const ledger::TxRejected& e) {
    if (log_) log_->tx(tx, false, e.what());
    throw;
  }
}

std::optional<std::string> Party::try_submit(ledger::TxKind kind, Bytes payload,
                                             ledger::Receipt* out) {
  try {
    ledger::Receipt r = submit(kind, std::move(payload));
    if (out) *out = std::move(r);
    return std::nullopt;
  } catch (const ledger::TxRejected& e) {
    return std::string(e.what());
  }
}

// --- Server ----------------------------------------------------------------

Server::Server(AccountId id, crypto::SigKeypair key, ledger::Ledger& ledger, EventLog* log,
               ServerStore store, crypto::XofSampler rng)
    : Party(std::move(id), std::move(key), ledger, log),
      store_(std::move(store)),
      rng_(std::move(rng)) {}

DigestAck Server::receive_file(const por::TaggedFile& file, std::optional<uint64_t> wrong_index) {
  store_.save(file);
  file_ = std::make_shared<const por::TaggedFile>(store_.load());
  DigestAck ack;
  ack.h.reserve(file_->blocks.size());
  for (size_t i = 0; i < file_->blocks.size(); ++i) {
    ack.h.push_back(por::block_digest(file_->blocks[i], file_->tags[i]));
  }
  if (wrong_index && *wrong_index >= 1 && *wrong_index <= ack.h.size()) {
    ack.h[*wrong_index - 1][0] ^= 0x01;
  }
  ack.server_sig = crypto::sign(ledger::server_digest_message(ack.h), key_);
  return ack;
}

void Server::drop_block(uint64_t index) {
  PORCHAIN_ENFORCE(file_ && index >= 1 && index <= file_->blocks.size(), ParameterError,
                   "no block " + std::to_string(index) + " to drop");
  por::TaggedFile f = *file_;
  f.blocks[index - 1].assign(f.layout.s, por::Scalar::zero());
  store_.save(f);
  file_ = std::make_shared<const por::TaggedFile>(std::move(f));
}

void Server::restart() { file_ = std::make_shared<const por::TaggedFile>(store_.load()); }

FetchedFile Server::send_file(std::optional<uint64_t> corrupt_index) const {
  PORCHAIN_ENFORCE(file_ != nullptr, ProtocolError, "server holds no file");
  FetchedFile out{file_->blocks, file_->tags};
  if (corrupt_index && *corrupt_index >= 1 && *corrupt_index <= out.blocks.size()) {
    out.blocks[*corrupt_index - 1][0] += por::Scalar::one();
  }
  return out;
}

channel::ServerChannel Server::open_session(const channel::ChannelParams& params,
                                            const Bytes& auditor_vk,
                                            std::shared_ptr<const por::PublicKey> pk,
                                            channel::ServerOptions options) {
  PORCHAIN_ENFORCE(file_ != nullptr, ProtocolError, "server holds no file");
  return channel::ServerChannel(params, key_, auditor_vk, file_, std::move(pk),
                                rng_.fork("server/session"), options);
}

// --- Owner -----------------------------------------------------------------

Owner::Owner(AccountId id, crypto::SigKeypair key, ledger::Ledger& ledger, EventLog* log,
             crypto::XofSampler rng)
    : Party(std::move(id), std::move(key), ledger, log), rng_(std::move(rng)) {}

std::optional<std::string> Owner::phase0(const ledger::ContractTerms& terms, uint64_t deposit,
                                         const Party& server, const Party& auditor) {
  ByteWriter reg;
  terms.write(reg);
  reg.u64(deposit);
  if (auto err = try_submit(ledger::TxKind::kRegisterOwner, std::move(reg).take())) return err;
  ByteWriter s;
  s.field(server.id());
  s.field(server.verify_key());
  if (auto err = try_submit(ledger::TxKind::kRegisterServer, std::move(s).take())) return err;
  ByteWriter a;
  a.field(auditor.id());
  a.field(auditor.verify_key());
  return try_submit(ledger::TxKind::kRegisterAuditor, std::move(a).take());
}

Owner::UploadResult Owner::upload(ByteView data, por::Scheme scheme, size_t sectors,
                                  Server& server, std::optional<uint64_t> server_wrong_index,
                                  bool deny_countersign, unsigned threads) {
  UploadResult res;
  auto t0 = std::chrono::steady_clock::now();
  const auto suite = crypto::PairingSuite::bls12_381();
  por::PorParams params;
  if (scheme == por::Scheme::kAuB) {
    crypto::XofSampler key_rng = rng_.fork("owner/keygen");
    keys_ = por::keygen_aub(suite, sectors, key_rng);
    params = por::PorParams::aub(sectors);
  } else {
    crypto::XofSampler key_rng = rng_.fork("owner/keygen");
    keys_ = por::keygen_ppaub(suite, key_rng);
    params = por::PorParams::ppaub();
    fileid_ = rng_.fork("owner/fileid").scalar();
    params.fileid = fileid_;
  }
  tagged_ = por::tag_file(data, params, *keys_, threads);
  res.tag_ms = ms_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  DigestAck ack = server.receive_file(*tagged_, server_wrong_index);
  res.upload_ms = ms_since(t1);

  bool match = crypto::sig_verify(ledger::server_digest_message(ack.h), ack.server_sig,
                                  server.verify_key()) &&
               ack.h == tagged_->digests;
  if (!match) {
    for (size_t i = 0; i < ack.h.size() && i < tagged_->digests.size(); ++i) {
      if (ack.h[i] != tagged_->digests[i]) {
        res.failure = "server digest differs at block " + std::to_string(i + 1);
        break;
      }
    }
    if (res.failure.empty()) res.failure = "server digest signature or length invalid";
  } else if (deny_countersign) {
    res.failure = "owner withholds the countersignature";
  }
  if (!res.failure.empty()) {
    if (log_) log_->phase("abort", res.failure);
    try_submit(ledger::TxKind::kTerminate, {});
    return res;
  }
  Bytes osig = crypto::sign(ledger::owner_countersign_message(ack.h, ack.server_sig), key_);
  if (auto err = try_submit(ledger::TxKind::kReceiveSignedDigest, digest_payload(ack, osig))) {
    res.failure = *err;
    return res;
  }
  anchored_ = ack.h;
  res.anchored = true;
  return res;
}

std::optional<std::string> Owner::send_creds(const AccountId& auditor) {
  PORCHAIN_ENFORCE(keys_.has_value(), ProtocolError, "no keys before upload");
  ByteWriter w;
  w.field(auditor);
  w.field(keys_->pk.encode());
  if (fileid_) {
    w.field(fileid_->to_bytes());
  } else {
    w.field(ByteView{});
  }
  return try_submit(ledger::TxKind::kPublishCredentials, std::move(w).take());
}

FetchResult Owner::fetch(const Server& server, std::optional<uint64_t> corrupt_index) const {
  PORCHAIN_ENFORCE(tagged_ && !anchored_.empty(), ProtocolError, "nothing uploaded to fetch");
  FetchedFile f = server.send_file(corrupt_index);
  PORCHAIN_ENFORCE(f.blocks.size() == anchored_.size() && f.tags.size() == anchored_.size(),
                   ProtocolError, "server returned a different block count");
  FetchResult res;
  for (size_t i = 0; i < anchored_.size(); ++i) {
    if (por::block_digest(f.blocks[i], f.tags[i]) != anchored_[i]) res.mismatches.push_back(i + 1);
  }
  res.data = por::unchunk_file(f.blocks, tagged_->layout.sector_width,
                               tagged_->layout.original_length);
  return res;
}

// --- Auditor ---------------------------------------------------------------

void Auditor::load_credentials() {
  ledger::ContractState c = ledger_.contract();
  PORCHAIN_ENFORCE(!c.credentials.empty(), ProtocolError, "credentials not published");
  PORCHAIN_ENFORCE(c.auditor_id && *c.auditor_id == id_, ProtocolError,
                   "credentials are addressed to another auditor");
  pk_ = std::make_shared<const por::PublicKey>(por::PublicKey::decode(c.credentials));
}

channel::AuditorChannel Auditor::open_session(const channel::ChannelParams& params,
                                              const Bytes& server_vk,
                                              channel::AuditorOptions options) {
  PORCHAIN_ENFORCE(pk_ != nullptr, ProtocolError, "auditor has no credentials");
  return channel::AuditorChannel(params, key_, server_vk, pk_, std::move(options));
}

}  // namespace porchain::actors
