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

#include "porchain/ledger/ledger.hpp"

#include <algorithm>

#include "porchain/common/format.hpp"
#include "porchain/crypto/domain.hpp"
#include "porchain/crypto/hash.hpp"
#include "porchain/por/verify.hpp"

namespace porchain::ledger {

namespace {

enum class LogEntry : uint8_t { kGenesis = 0, kTx = 1, kAdvance = 2 };

struct Account {
  Bytes verify_key;
  uint64_t balance = 0;
  uint64_t seq = 0;
};

[[noreturn]] void reject(const std::string& why) { throw TxRejected(why); }

void require(bool cond, const std::string& why) {
  if (!cond) reject(why);
}

}  // namespace

Hash32 compute_tx_root(const std::vector<Hash32>& tx_hashes) {
  Bytes cat;
  cat.reserve(tx_hashes.size() * 32);
  for (const Hash32& h : tx_hashes) cat.insert(cat.end(), h.begin(), h.end());
  return crypto::sha256(cat);
}

Hash32 compute_header_hash(uint64_t height, const Hash32& parent, const Hash32& tx_root) {
  return crypto::sha256_concat({u64_be(height), parent, tx_root});
}

// Everything a rejected transaction must leave untouched.
struct World {
  std::map<AccountId, Account> accounts;
  std::map<std::string, uint64_t> escrow;
  ContractState c;
  std::shared_ptr<const por::PublicKey> pk;
  std::vector<Verdict> verdicts;
  std::vector<Hash32> pending;
};

struct Ledger::State {
  World w;
  std::vector<BlockHeader> chain;
  std::vector<GenesisAccount> genesis;
  ByteWriter log;
  double wait_ms = 0;

  uint64_t height() const { return chain.back().height; }

  void move(const std::string& from, const std::string& to, uint64_t amount) {
    auto debit = [&](const std::string& id) -> uint64_t& {
      if (auto it = w.escrow.find(id); it != w.escrow.end()) return it->second;
      if (auto it = w.accounts.find(id); it != w.accounts.end()) return it->second.balance;
      if (id.rfind("escrow/", 0) == 0) return w.escrow[id];
      reject("unknown account " + id);
    };
    uint64_t& src = debit(from);
    require(src >= amount, "insufficient funds in " + from);
    src -= amount;
    debit(to) += amount;
  }

  uint64_t escrow_of(std::string_view bucket) const {
    auto it = w.escrow.find(std::string(bucket));
    return it == w.escrow.end() ? 0 : it->second;
  }

  // --- settlement -------------------------------------------------------

  enum class Offender { kNone, kServer, kAuditor };

  Verdict settle(Outcome outcome, Reason reason, bool pay_server, bool pay_auditor,
                 Offender offender, std::string detail) {
    const ContractTerms& t = w.c.terms;
    const AccountId& owner = *w.c.owner_id;
    const AccountId& server = *w.c.server_id;
    const AccountId& auditor = *w.c.auditor_id;
    Verdict v;
    v.channel_counter = w.c.channel.counter;
    v.channel_id = w.c.channel.channel_id;
    v.height = height();
    v.outcome = outcome;
    v.reason = reason;
    v.detail = std::move(detail);

    auto transfer = [&](std::string_view from, const std::string& to, uint64_t amount,
                        TransferKind kind) {
      if (amount == 0) return;
      move(std::string(from), to, amount);
      v.transfers.push_back({std::string(from), to, amount, kind});
    };
    transfer(bucket::kFrozen, pay_server ? server : owner, t.c_s,
             pay_server ? TransferKind::kPayment : TransferKind::kRefund);
    transfer(bucket::kFrozen, pay_auditor ? auditor : owner, t.c_a,
             pay_auditor ? TransferKind::kPayment : TransferKind::kRefund);

    auto release = [&](std::string_view bkt, const AccountId& depositor, bool offends) {
      const uint64_t held = escrow_of(bkt);
      uint64_t taken = 0;
      if (offends) taken = t.penalty == 0 ? held : std::min(held, t.penalty);
      transfer(bkt, owner, taken, TransferKind::kPenalty);
      transfer(bkt, depositor, held - taken, TransferKind::kRefund);
    };
    release(bucket::kServerDeposit, server, offender == Offender::kServer);
    release(bucket::kAuditorDeposit, auditor, offender == Offender::kAuditor);

    w.c.channel.status = ChannelStatus::kClosed;
    w.c.channel.h_b.reset();
    w.c.channel.dispute.reset();
    w.verdicts.push_back(v);
    return v;
  }

  Verdict penalize_auditor(Reason reason, bool pay_server, std::string detail) {
    return settle(Outcome::kPenalizeAuditor, reason, pay_server, false, Offender::kAuditor,
                  std::move(detail));
  }
  Verdict penalize_server(Reason reason, std::string detail) {
    return settle(Outcome::kPenalizeServer, reason, false, true, Offender::kServer,
                  std::move(detail));
  }

  // --- query checks -----------------------------------------------------

  // Signature check under pk_A then element-wise regeneration from h_b.
  std::optional<std::pair<Reason, std::string>> check_queries(
      const std::vector<por::Query>& qs) const {
    const ChannelRecord& ch = w.c.channel;
    const uint64_t n = w.c.digest->h.size();
    for (size_t j = 0; j < qs.size(); ++j) {
      if (!crypto::sig_verify(qs[j].signing_bytes(ch.channel_id), qs[j].sig, w.c.pk_a)) {
        return std::make_pair(Reason::kBadQuerySignature,
                              "auditor signature fails on query " + std::to_string(j));
      }
      por::Query expect = por::gen_query(*ch.h_b, n, w.c.terms.query_size, j);
      if (!expect.same_challenge(qs[j])) {
        return std::make_pair(Reason::kQueryMismatch,
                              "query " + std::to_string(j) + " differs from regeneration");
      }
    }
    return std::nullopt;
  }

  // --- handlers -----------------------------------------------------------

  std::optional<Verdict> handle(const Transaction& tx) {
    ByteReader r(tx.payload);
    switch (tx.kind) {
      case TxKind::kRegisterOwner:
        return register_owner(tx, r);
      case TxKind::kRegisterServer:
      case TxKind::kRegisterAuditor:
        return register_party(tx, r);
      case TxKind::kReceiveSignedDigest:
        return receive_digest(tx, r);
      case TxKind::kPublishCredentials:
        return publish_credentials(tx, r);
      case TxKind::kPostDeposit:
        return post_deposit(tx, r);
      case TxKind::kOpenChannel:
        return open_channel(tx, r);
      case TxKind::kCloseChannel:
        return close_channel(tx, r);
      case TxKind::kSubmitRebuttal:
        return submit_rebuttal(tx, r);
      case TxKind::kTerminate:
        return terminate(tx, r);
    }
    reject("unknown transaction kind " + std::to_string(static_cast<int>(tx.kind)));
  }

  void require_live() const { require(!w.c.terminated, "contract terminated"); }
  void require_owner(const Transaction& tx) const {
    require(w.c.owner_id.has_value(), "owner not registered");
    require(tx.sender == *w.c.owner_id, "caller is not the owner");
  }

  std::optional<Verdict> register_owner(const Transaction& tx, ByteReader& r) {
    require(!w.c.owner_id, "owner already registered");
    ContractTerms terms = ContractTerms::read(r);
    const uint64_t deposit = r.u64();
    r.expect_done();
    try {
      terms.validate();
    } catch (const ParameterError& e) {
      reject(e.what());
    }
    require(deposit >= terms.c_s + terms.c_a, "insufficient deposit: " + std::to_string(deposit) +
                                                  " < c_s + c_a = " +
                                                  std::to_string(terms.c_s + terms.c_a));
    move(tx.sender, std::string(bucket::kOwnerEscrow), deposit);
    w.c.owner_id = tx.sender;
    w.c.pk_o = w.accounts.at(tx.sender).verify_key;
    w.c.terms = terms;
    return std::nullopt;
  }

  std::optional<Verdict> register_party(const Transaction& tx, ByteReader& r) {
    require_live();
    require_owner(tx);
    const bool server = tx.kind == TxKind::kRegisterServer;
    AccountId id = r.str();
    ByteView pk = r.field();
    r.expect_done();
    auto& slot = server ? w.c.server_id : w.c.auditor_id;
    require(!slot, server ? "server already registered" : "auditor already registered");
    auto acct = w.accounts.find(id);
    require(acct != w.accounts.end(), "unknown account " + id);
    require(Bytes(pk.begin(), pk.end()) == acct->second.verify_key,
            "verify key does not match account " + id);
    const auto& other = server ? w.c.auditor_id : w.c.server_id;
    require(!other || *other != id, "server and auditor must differ");
    require(!server || id != *w.c.owner_id, "owner cannot be its own server");
    slot = id;
    (server ? w.c.pk_s : w.c.pk_a) = acct->second.verify_key;
    return std::nullopt;
  }

  std::optional<Verdict> receive_digest(const Transaction& tx, ByteReader& r) {
    require_live();
    require_owner(tx);
    require(w.c.server_id.has_value(), "server not registered");
    require(!w.c.digest, "digest already anchored");
    AnchoredDigest d;
    const uint32_t n = r.u32();
    require(n >= 1, "empty digest list");
    require(n <= r.remaining() / 36, "digest count exceeds payload");
    for (uint32_t i = 0; i < n; ++i) {
      ByteView h = r.fixed(32);
      Hash32 x;
      std::copy(h.begin(), h.end(), x.begin());
      d.h.push_back(x);
    }
    ByteView t = r.field();
    ByteView o = r.field();
    r.expect_done();
    d.server_sig.assign(t.begin(), t.end());
    d.owner_sig.assign(o.begin(), o.end());
    require(crypto::sig_verify(server_digest_message(d.h), d.server_sig, w.c.pk_s),
            "server signature over digest invalid");
    require(crypto::sig_verify(owner_countersign_message(d.h, d.server_sig), d.owner_sig, w.c.pk_o),
            "owner countersignature invalid");
    w.c.digest = std::move(d);
    return std::nullopt;
  }

  std::optional<Verdict> publish_credentials(const Transaction& tx, ByteReader& r) {
    require_live();
    require_owner(tx);
    require(w.c.digest.has_value(), "digest not anchored");
    require(w.c.auditor_id.has_value(), "auditor not registered");
    require(w.c.credentials.empty(), "credentials already published");
    AccountId to = r.str();
    ByteView pk_bytes = r.field();
    ByteView fid = r.field();
    r.expect_done();
    require(to == *w.c.auditor_id, "credentials addressed to unregistered auditor " + to);
    std::shared_ptr<const por::PublicKey> pk;
    std::optional<por::Scalar> fileid;
    try {
      pk = std::make_shared<const por::PublicKey>(por::PublicKey::decode(pk_bytes));
      if (!fid.empty()) fileid = por::Scalar::from_canonical(fid);
    } catch (const Error& e) {
      reject(std::string("bad credentials: ") + e.what());
    }
    require(pk->scheme() == Scheme::kAuB || fileid.has_value(), "PPAuB credentials need a fileid");
    w.c.credentials.assign(pk_bytes.begin(), pk_bytes.end());
    w.c.fileid = fileid;
    w.pk = std::move(pk);
    return std::nullopt;
  }

  std::optional<Verdict> post_deposit(const Transaction& tx, ByteReader& r) {
    require_live();
    const uint64_t amount = r.u64();
    r.expect_done();
    require(amount > 0, "deposit must be positive");
    require(w.c.channel.status != ChannelStatus::kOpen &&
                w.c.channel.status != ChannelStatus::kDisputed,
            "deposits are locked while a channel is open");
    if (w.c.server_id && tx.sender == *w.c.server_id) {
      move(tx.sender, std::string(bucket::kServerDeposit), amount);
    } else if (w.c.auditor_id && tx.sender == *w.c.auditor_id) {
      move(tx.sender, std::string(bucket::kAuditorDeposit), amount);
    } else {
      reject("only the server or auditor may post a channel deposit");
    }
    return std::nullopt;
  }

  std::optional<Verdict> open_channel(const Transaction& tx, ByteReader& r) {
    require_live();
    r.expect_done();
    require(w.c.auditor_id.has_value() && tx.sender == *w.c.auditor_id,
            "caller does not match the stored auditor id");
    require(w.c.digest.has_value(), "digest not anchored");
    require(w.pk != nullptr, "credentials not published");
    require(w.c.channel.status != ChannelStatus::kOpen &&
                w.c.channel.status != ChannelStatus::kDisputed,
            "channel already open");
    const ContractTerms& t = w.c.terms;
    require(escrow_of(bucket::kServerDeposit) >= t.deposit_s, "server deposit below terms");
    require(escrow_of(bucket::kAuditorDeposit) >= t.deposit_a, "auditor deposit below terms");
    require(escrow_of(bucket::kOwnerEscrow) >= t.c_s + t.c_a, "owner escrow below c_s + c_a");
    if (w.pk->scheme() == Scheme::kAuB) {
      require(t.query_size <= w.c.digest->h.size(), "query size exceeds block count");
    }
    move(std::string(bucket::kOwnerEscrow), std::string(bucket::kFrozen), t.c_s + t.c_a);

    ChannelRecord& ch = w.c.channel;
    ch.status = ChannelStatus::kOpen;
    ++ch.counter;
    if (!ch.h_b) ch.h_b = chain.back().header_hash;
    Bytes id_material = u64_be(ch.counter);
    id_material.insert(id_material.end(), ch.h_b->begin(), ch.h_b->end());
    ch.channel_id = crypto::tagged_hash(domain::kChannelId, id_material);
    ch.nonce_floor = 0;
    ch.opened_at = height();
    ch.dispute.reset();
    return std::nullopt;
  }

  std::optional<Verdict> close_channel(const Transaction& tx, ByteReader& r) {
    require(w.c.channel.status == ChannelStatus::kOpen, "channel not open");
    const bool from_server = tx.sender == *w.c.server_id;
    const bool from_auditor = tx.sender == *w.c.auditor_id;
    require(from_server || from_auditor, "caller is neither server nor auditor");
    ClosePayload p;
    try {
      p = ClosePayload::decode(r.raw(r.remaining()));
    } catch (const FormatError& e) {
      reject(std::string("unparseable close payload: ") + e.what());
    }
    require(p.scheme == w.pk->scheme(), "close payload scheme does not match credentials");
    const size_t k = p.queries.size();
    const ContractTerms& t = w.c.terms;

    if (!p.complaint) {
      require(from_auditor, "complaint-free close must come from the auditor");
      require(k >= 1, "empty session: at least one query is required");
      if (auto bad = check_queries(p.queries)) {
        return penalize_auditor(bad->first, false, bad->second);
      }
      std::vector<por::QueryEntry> all;
      for (const por::Query& q : p.queries) all.insert(all.end(), q.entries.begin(), q.entries.end());
      const por::VerifyStatus st = fileid_matches(p)
                                       ? por::verify_encoded(all, p.proof, *w.pk, w.c.fileid)
                                       : por::VerifyStatus::kMalformed;
      if (st != por::VerifyStatus::kValid) {
        return penalize_auditor(
            st == por::VerifyStatus::kMalformed ? Reason::kMalformedProof : Reason::kAggregateFailed,
            false, "aggregate over " + std::to_string(k) + " queries is " +
                       std::string(por::verify_status_name(st)));
      }
      if (k < t.audit_count) {
        return penalize_auditor(Reason::kUnderAudited, true,
                                std::to_string(k) + " of " + std::to_string(t.audit_count) +
                                    " required queries");
      }
      return settle(Outcome::kPaidBoth, Reason::kOk, true, true, Offender::kNone,
                    std::to_string(k) + " queries verified");
    }

    if (from_server) {
      if (auto bad = check_queries(p.queries)) {
        return penalize_auditor(bad->first, true, bad->second);
      }
      if (p.scheme == Scheme::kAuB && k > t.effective_privacy_cap()) {
        return penalize_auditor(Reason::kPrivacyCap, true,
                                std::to_string(k) + " queries exceed cap " +
                                    std::to_string(t.effective_privacy_cap()));
      }
      return penalize_server(Reason::kFalseComplaint, "all submitted queries are well formed");
    }

    require(k >= 1, "auditor complaint names no query");
    if (auto bad = check_queries(p.queries)) {
      return penalize_auditor(bad->first, true, bad->second);
    }
    ChannelRecord& ch = w.c.channel;
    ch.status = ChannelStatus::kDisputed;
    ch.dispute = Dispute{tx.sender, p.queries.back(), height() + t.dispute_window, std::nullopt};
    return std::nullopt;
  }

  bool fileid_matches(const ClosePayload& p) const {
    return !p.fileid || (w.c.fileid && *p.fileid == *w.c.fileid);
  }

  std::optional<Verdict> submit_rebuttal(const Transaction& tx, ByteReader& r) {
    require(w.c.channel.status == ChannelStatus::kDisputed && w.c.channel.dispute,
            "no dispute is open");
    require(tx.sender == *w.c.server_id, "only the server may rebut");
    Dispute& d = *w.c.channel.dispute;
    require(height() < d.deadline, "dispute window expired");
    ByteView proof = r.field();
    r.expect_done();
    d.rebuttal = Bytes(proof.begin(), proof.end());
    const por::VerifyStatus st =
        por::verify_encoded(d.last_query.entries, proof, *w.pk, w.c.fileid);
    const std::string which = "last query seq " + std::to_string(d.last_query.seq);
    switch (st) {
      case por::VerifyStatus::kValid:
        return penalize_auditor(Reason::kRebuttalValid, true, "rebuttal verifies on " + which);
      case por::VerifyStatus::kInvalid:
        return penalize_server(Reason::kRebuttalFailed, "rebuttal fails on " + which);
      case por::VerifyStatus::kMalformed:
        break;
    }
    return penalize_server(Reason::kRebuttalMalformed, "rebuttal malformed on " + which);
  }

  std::optional<Verdict> terminate(const Transaction& tx, ByteReader& r) {
    require_live();
    require_owner(tx);
    r.expect_done();
    require(!w.c.digest, "escrow is locked once the digest is anchored");
    Verdict v;
    v.height = height();
    v.outcome = Outcome::kTerminated;
    v.reason = Reason::kOwnerAbort;
    v.detail = "owner aborted before anchoring";
    auto refund = [&](std::string_view bkt, const std::optional<AccountId>& to) {
      uint64_t held = escrow_of(bkt);
      if (held == 0 || !to) return;
      move(std::string(bkt), *to, held);
      v.transfers.push_back({std::string(bkt), *to, held, TransferKind::kRefund});
    };
    refund(bucket::kOwnerEscrow, w.c.owner_id);
    refund(bucket::kServerDeposit, w.c.server_id);
    refund(bucket::kAuditorDeposit, w.c.auditor_id);
    w.c.terminated = true;
    w.verdicts.push_back(v);
    return v;
  }
};

Ledger::Ledger(std::vector<GenesisAccount> genesis, LedgerConfig config)
    : config_(config), st_(std::make_unique<State>()) {
  write_header(st_->log, magic::kTxLog);
  ByteWriter g;
  g.u32(static_cast<uint32_t>(genesis.size()));
  for (const GenesisAccount& a : genesis) {
    PORCHAIN_ENFORCE(a.id.rfind("escrow/", 0) != 0, ParameterError, "reserved account name " + a.id);
    PORCHAIN_ENFORCE(st_->w.accounts.emplace(a.id, Account{a.verify_key, a.balance, 0}).second,
                     ParameterError, "duplicate genesis account " + a.id);
    g.field(a.id);
    g.field(a.verify_key);
    g.u64(a.balance);
  }
  st_->log.u8(static_cast<uint8_t>(LogEntry::kGenesis));
  st_->log.field(g.bytes());
  st_->genesis = std::move(genesis);

  BlockHeader b0;
  b0.tx_root = compute_tx_root({});
  b0.header_hash = compute_header_hash(0, b0.parent_hash, b0.tx_root);
  st_->chain.push_back(b0);
}

std::unique_ptr<Ledger> Ledger::replay(ByteView log, LedgerConfig config) {
  ByteReader r(log);
  read_header(r, magic::kTxLog);
  PORCHAIN_ENFORCE(static_cast<LogEntry>(r.u8()) == LogEntry::kGenesis, FormatError,
                   "log must start with genesis");
  ByteReader g(r.field());
  std::vector<GenesisAccount> accounts(g.u32());
  for (GenesisAccount& a : accounts) {
    a.id = g.str();
    ByteView vk = g.field();
    a.verify_key.assign(vk.begin(), vk.end());
    a.balance = g.u64();
  }
  g.expect_done();
  auto ledger = std::make_unique<Ledger>(std::move(accounts), config);
  while (!r.done()) {
    auto kind = static_cast<LogEntry>(r.u8());
    ByteView body = r.field();
    if (kind == LogEntry::kTx) {
      try {
        ledger->submit(Transaction::decode(body));
      } catch (const TxRejected&) {
      }
    } else if (kind == LogEntry::kAdvance) {
      ledger->advance_blocks(get_u64_be(body));
    } else {
      throw FormatError("unknown log entry");
    }
  }
  return ledger;
}

Ledger::~Ledger() = default;

Receipt Ledger::submit(const Transaction& tx) {
  std::lock_guard lock(mu_);
  st_->log.u8(static_cast<uint8_t>(LogEntry::kTx));
  st_->log.field(tx.encode());
  return apply(tx);
}

Receipt Ledger::apply(const Transaction& tx) {
  State& s = *st_;
  World snapshot = s.w;
  try {
    auto acct = s.w.accounts.find(tx.sender);
    require(acct != s.w.accounts.end(), "unknown sender " + tx.sender);
    require(crypto::sig_verify(tx.signing_bytes(), tx.sig, acct->second.verify_key),
            "transaction signature invalid");
    require(tx.seq == acct->second.seq, "sequence number " + std::to_string(tx.seq) +
                                            " expected " + std::to_string(acct->second.seq));
    ++acct->second.seq;
    Receipt receipt;
    receipt.tx_hash = tx.hash();
    try {
      receipt.verdict = s.handle(tx);
    } catch (const FormatError& e) {
      reject(std::string("malformed payload: ") + e.what());
    }
    s.w.pending.push_back(receipt.tx_hash);
    return receipt;
  } catch (...) {
    s.w = std::move(snapshot);
    throw;
  }
}

void Ledger::advance_blocks(uint64_t count) {
  std::lock_guard lock(mu_);
  PORCHAIN_ENFORCE(count >= 1, ParameterError, "advance at least one block");
  st_->log.u8(static_cast<uint8_t>(LogEntry::kAdvance));
  st_->log.field(u64_be(count));
  for (uint64_t k = 0; k < count; ++k) {
    seal_block();
    expire_disputes();
  }
}

void Ledger::seal_block() {
  State& s = *st_;
  BlockHeader b;
  b.height = s.height() + 1;
  b.parent_hash = s.chain.back().header_hash;
  b.tx_hashes = std::move(s.w.pending);
  s.w.pending.clear();
  b.tx_root = compute_tx_root(b.tx_hashes);
  b.header_hash = compute_header_hash(b.height, b.parent_hash, b.tx_root);
  s.chain.push_back(std::move(b));
  s.wait_ms += config_.block_wait_ms;
}

void Ledger::expire_disputes() {
  State& s = *st_;
  ChannelRecord& ch = s.w.c.channel;
  if (ch.status != ChannelStatus::kDisputed || !ch.dispute) return;
  if (s.height() < ch.dispute->deadline) return;
  s.penalize_server(Reason::kDisputeTimeout,
                    "no rebuttal for last query seq " + std::to_string(ch.dispute->last_query.seq) +
                        " within " + std::to_string(s.w.c.terms.dispute_window) + " blocks");
}

uint64_t Ledger::height() const {
  std::lock_guard lock(mu_);
  return st_->height();
}

Hash32 Ledger::last_block_hash() const {
  std::lock_guard lock(mu_);
  return st_->chain.back().header_hash;
}

std::vector<BlockHeader> Ledger::chain() const {
  std::lock_guard lock(mu_);
  return st_->chain;
}

uint64_t Ledger::next_seq(const AccountId& id) const {
  std::lock_guard lock(mu_);
  auto it = st_->w.accounts.find(id);
  return it == st_->w.accounts.end() ? 0 : it->second.seq;
}

uint64_t Ledger::balance_of(const std::string& id) const {
  std::lock_guard lock(mu_);
  if (auto it = st_->w.accounts.find(id); it != st_->w.accounts.end()) return it->second.balance;
  return st_->escrow_of(id);
}

std::map<std::string, uint64_t> Ledger::balances() const {
  std::lock_guard lock(mu_);
  std::map<std::string, uint64_t> out = st_->w.escrow;
  for (const auto& [id, a] : st_->w.accounts) out[id] = a.balance;
  return out;
}

uint64_t Ledger::total_currency() const {
  uint64_t total = 0;
  for (const auto& [id, v] : balances()) total += v;
  return total;
}

ContractState Ledger::contract() const {
  std::lock_guard lock(mu_);
  return st_->w.c;
}

std::vector<Verdict> Ledger::verdicts() const {
  std::lock_guard lock(mu_);
  return st_->w.verdicts;
}

std::optional<Hash32> Ledger::channel_seed() const {
  std::lock_guard lock(mu_);
  return st_->w.c.channel.h_b;
}

double Ledger::simulated_wait_ms() const {
  std::lock_guard lock(mu_);
  return st_->wait_ms;
}

Hash32 Ledger::state_digest() const {
  std::lock_guard lock(mu_);
  const State& s = *st_;
  ByteWriter w;
  w.u64(s.height());
  w.field(s.chain.back().header_hash);
  for (const auto& [id, a] : s.w.accounts) {
    w.field(id);
    w.u64(a.balance);
    w.u64(a.seq);
  }
  for (const auto& [id, v] : s.w.escrow) {
    w.field(id);
    w.u64(v);
  }
  const ContractState& c = s.w.c;
  w.field(c.owner_id.value_or(""));
  c.terms.write(w);
  w.field(c.server_id.value_or(""));
  w.field(c.auditor_id.value_or(""));
  w.u32(c.digest ? static_cast<uint32_t>(c.digest->h.size()) : 0);
  if (c.digest) {
    for (const Hash32& h : c.digest->h) w.field(h);
  }
  w.field(c.credentials);
  w.u8(static_cast<uint8_t>(c.channel.status));
  w.u64(c.channel.counter);
  w.field(c.channel.channel_id);
  w.field(c.channel.h_b ? ByteView(*c.channel.h_b) : ByteView{});
  w.u8(c.terminated ? 1 : 0);
  for (const Verdict& v : s.w.verdicts) w.field(v.to_json_line());
  for (const Hash32& h : s.w.pending) w.field(h);
  return crypto::sha256(w.bytes());
}

Bytes Ledger::transaction_log() const {
  std::lock_guard lock(mu_);
  return st_->log.bytes();
}

}  // namespace porchain::ledger
