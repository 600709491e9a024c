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

#include "porchain/actors/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unistd.h>

#include "porchain/common/error.hpp"

namespace porchain::actors {

using ledger::Outcome;
using ledger::Reason;
using ledger::TxKind;
using por::Scheme;

namespace {

using Off = Expectation::Offender;

Expectation expect(Outcome o, std::set<Reason> reasons, bool server_paid, bool auditor_paid,
                   Off offender) {
  return Expectation{o, std::move(reasons), server_paid, auditor_paid, offender};
}

const std::vector<Scheme> kBoth = {Scheme::kAuB, Scheme::kPPAuB};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string join_indices(const std::vector<uint64_t>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Bytes u64_payload(uint64_t v) {
  ByteWriter w;
  w.u64(v);
  return std::move(w).take();
}

uint64_t escrow_total(const ledger::Ledger& l) {
  return l.balance_of(std::string(ledger::bucket::kOwnerEscrow)) +
         l.balance_of(std::string(ledger::bucket::kFrozen)) +
         l.balance_of(std::string(ledger::bucket::kServerDeposit)) +
         l.balance_of(std::string(ledger::bucket::kAuditorDeposit));
}

std::filesystem::path fresh_temp_dir() {
  static std::atomic<uint64_t> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("porchain-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Collects assertion results both in the report and the event stream.
struct Checker {
  ScenarioReport& rep;
  void operator()(std::string name, bool ok, std::string detail) {
    rep.events.assertion(name, ok, detail);
    rep.assertions.push_back({std::move(name), ok, std::move(detail)});
  }
};

}  // namespace

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kHonest: return "honest";
    case Strategy::kServerDropBlock: return "server-drop-block";
    case Strategy::kServerClaimWrongBlock: return "server-claim-wrong-block";
    case Strategy::kServerWrongFetch: return "server-wrong-fetch";
    case Strategy::kAuditorOverQuery: return "auditor-over-query";
    case Strategy::kAuditorMisrecordResponse: return "auditor-misrecord-response";
    case Strategy::kAuditorSuppressQuery: return "auditor-suppress-query";
    case Strategy::kOwnerDenyPayment: return "owner-deny-payment";
    case Strategy::kOwnerDenyCountersign: return "owner-deny-countersign";
    case Strategy::kColludeIgnoreFail: return "server-auditor-ignore-fail";
    case Strategy::kColludeSkipIndex: return "server-auditor-skip-index";
    case Strategy::kOwnerAuditorCollude: return "owner-auditor-collude";
    case Strategy::kOwnerServerColludeDenyAuditorPay: return "owner-server-deny-auditor-pay";
  }
  return "unknown";
}

const std::vector<ScenarioSpec>& scenario_registry() {
  static const std::vector<ScenarioSpec> reg = {
      {"honest", Strategy::kHonest, kBoth,
       expect(Outcome::kPaidBoth, {Reason::kOk}, true, true, Off::kNone),
       "all parties follow the protocol"},
      {"case1-dropblock", Strategy::kServerDropBlock, kBoth,
       expect(Outcome::kPenalizeServer, {Reason::kRebuttalFailed, Reason::kDisputeTimeout}, false,
              true, Off::kServer),
       "server deletes a challenged block"},
      {"case1-wrongdigest", Strategy::kServerClaimWrongBlock, kBoth,
       expect(Outcome::kTerminated, {Reason::kOwnerAbort}, false, false, Off::kNone),
       "server acknowledges an altered block 3; owner terminates before anchoring"},
      {"case1-wrongfetch", Strategy::kServerWrongFetch, kBoth,
       expect(Outcome::kPaidBoth, {Reason::kOk}, true, true, Off::kNone),
       "server returns a corrupted block 2 on download; the owner detects it"},
      {"case2-overquery", Strategy::kAuditorOverQuery, {Scheme::kAuB},
       expect(Outcome::kPenalizeAuditor, {Reason::kPrivacyCap}, true, false, Off::kAuditor),
       "auditor asks one query beyond the cap; the server complains"},
      {"case2-misrecord", Strategy::kAuditorMisrecordResponse, kBoth,
       expect(Outcome::kPenalizeAuditor, {Reason::kRebuttalValid}, true, false, Off::kAuditor),
       "auditor stores a modified response and complains; the rebuttal clears the server"},
      {"case2-suppress", Strategy::kAuditorSuppressQuery, kBoth,
       expect(Outcome::kPenalizeAuditor, {Reason::kQueryMismatch}, false, false, Off::kAuditor),
       "auditor leaves query 1 out of its close payload"},
      {"case3-denypayment", Strategy::kOwnerDenyPayment, kBoth,
       expect(Outcome::kPaidBoth, {Reason::kOk}, true, true, Off::kNone),
       "owner tries every operation that could move escrow; none can"},
      {"case3-denycountersign", Strategy::kOwnerDenyCountersign, kBoth,
       expect(Outcome::kTerminated, {Reason::kOwnerAbort}, false, false, Off::kNone),
       "owner withholds the countersignature; nothing is anchored and no channel opens"},
      {"case4-ignorefail", Strategy::kColludeIgnoreFail, kBoth,
       expect(Outcome::kPenalizeAuditor, {Reason::kAggregateFailed}, false, false, Off::kAuditor),
       "server drops a block and the auditor closes over the failed answer"},
      {"case4-skipindex", Strategy::kColludeSkipIndex, kBoth,
       expect(Outcome::kPenalizeAuditor, {Reason::kQueryMismatch}, false, false, Off::kAuditor),
       "auditor swaps the dropped index out of its query; the contract regenerates it"},
      {"case5-owner-auditor", Strategy::kOwnerAuditorCollude, kBoth,
       expect(Outcome::kPenalizeAuditor, {Reason::kRebuttalValid}, true, false, Off::kAuditor),
       "owner audits its own file and misrecords a response"},
      {"case6-false-complaint", Strategy::kOwnerServerColludeDenyAuditorPay, kBoth,
       expect(Outcome::kPenalizeServer, {Reason::kFalseComplaint}, false, true, Off::kServer),
       "server raises a baseless complaint to deny the auditor its fee"},
  };
  return reg;
}

const ScenarioSpec* find_scenario(std::string_view name) {
  for (const ScenarioSpec& s : scenario_registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string RunMetrics::csv_header() {
  return "blocks,query_count,close_payload_bytes,upload_ms,tag_ms,prove_ms,verify_ms,"
         "ledger_wait_ms";
}

std::string RunMetrics::csv_row() const {
  auto mean = [](const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  };
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(3);
  o << blocks << ',' << query_count << ',' << close_payload_bytes << ',' << upload_ms << ','
    << tag_ms << ',' << mean(prove_ms) << ',' << mean(verify_ms) << ',' << ledger_wait_ms;
  return o.str();
}

const AssertionResult* ScenarioReport::assertion(std::string_view n) const {
  for (const AssertionResult& a : assertions) {
    if (a.name == n) return &a;
  }
  return nullptr;
}

double catch_probability(uint64_t n, uint64_t l, uint64_t k) {
  if (n == 0) return 0;
  return 1.0 - std::pow(static_cast<double>(n - std::min(n, l)) / static_cast<double>(n),
                        static_cast<double>(k));
}

namespace {

class Runner {
 public:
  Runner(const ScenarioConfig& cfg, const ScenarioSpec& spec)
      : cfg_(cfg), spec_(spec), st_(spec.strategy), check_{rep_} {}

  ScenarioReport run();

 private:
  bool phases();
  void session();
  void attempt_owner_moves(std::string_view when);
  void finish();
  void submit_close(Party& who, const ledger::ClosePayload& p);
  std::map<std::string, int64_t> predicted() const;

  const ScenarioConfig& cfg_;
  const ScenarioSpec& spec_;
  const Strategy st_;
  ScenarioReport rep_;
  Checker check_;

  ledger::ContractTerms terms_;
  std::vector<ledger::GenesisAccount> genesis_;
  std::unique_ptr<ledger::Ledger> ledger_;
  std::unique_ptr<Owner> owner_;
  std::unique_ptr<Server> server_;
  std::unique_ptr<Auditor> auditor_;
  std::optional<uint64_t> dropped_;
  uint64_t n_ = 0;
};

ScenarioReport Runner::run() {
  rep_.name = spec_.name;
  rep_.scheme = cfg_.scheme;
  const Economics& e = cfg_.economics;
  const uint64_t l = cfg_.query_size;
  const uint64_t k = cfg_.audit_count;
  const size_t s = cfg_.scheme == Scheme::kAuB ? cfg_.sectors : 1;
  PORCHAIN_ENFORCE(!cfg_.data.empty(), ParameterError, "scenario needs a non-empty file");
  PORCHAIN_ENFORCE(s >= 1, ParameterError, "sector count must be positive");
  n_ = por::block_count(cfg_.data.size(), s, por::default_sector_width());
  PORCHAIN_ENFORCE(l >= 1 && l <= n_, ParameterError,
                   "query size " + std::to_string(l) + " outside [1, " + std::to_string(n_) + "]");
  PORCHAIN_ENFORCE(k >= 1, ParameterError, "audit count must be positive");
  if (st_ == Strategy::kAuditorSuppressQuery || st_ == Strategy::kOwnerServerColludeDenyAuditorPay) {
    PORCHAIN_ENFORCE(k >= 2, ParameterError, spec_.name + " needs at least two audits");
  }
  if (st_ == Strategy::kAuditorOverQuery) {
    PORCHAIN_ENFORCE(l >= 2, ParameterError, "over-query needs a query size of at least 2");
  }
  if (st_ == Strategy::kServerWrongFetch) {
    PORCHAIN_ENFORCE(n_ >= 2, ParameterError, "wrong-fetch needs at least two blocks");
  }

  terms_.audit_count = k;
  terms_.c_s = e.c_s;
  terms_.c_a = e.c_a;
  terms_.deposit_s = e.deposit_s;
  terms_.deposit_a = e.deposit_a;
  terms_.penalty = e.penalty;
  terms_.dispute_window = e.dispute_window;
  terms_.query_size = l;
  if (st_ == Strategy::kAuditorOverQuery && !cfg_.privacy_cap) {
    terms_.privacy_cap = l - 1;
  } else {
    terms_.privacy_cap = cfg_.privacy_cap.value_or(std::max<uint64_t>(l - 1, k));
  }
  PORCHAIN_ENFORCE(terms_.privacy_cap >= 1, ParameterError, "privacy cap must be positive");
  if (st_ == Strategy::kAuditorOverQuery) {
    terms_.audit_count = std::min(k, terms_.privacy_cap);
  }
  terms_.validate();

  crypto::XofSampler root(cfg_.seed, "SCENARIO");
  crypto::XofSampler key_rng = root.fork("scenario/keys");
  crypto::SigKeypair ok = crypto::SigKeypair::generate(key_rng);
  crypto::SigKeypair sk = crypto::SigKeypair::generate(key_rng);
  crypto::SigKeypair ak = crypto::SigKeypair::generate(key_rng);
  const bool owner_audits = st_ == Strategy::kOwnerAuditorCollude;
  const std::string auditor_id = owner_audits ? "owner" : "auditor";

  genesis_.push_back({"owner", ok.verify_key, e.owner_balance});
  genesis_.push_back({"server", sk.verify_key, e.server_balance});
  if (!owner_audits) genesis_.push_back({"auditor", ak.verify_key, e.auditor_balance});
  ledger_ = std::make_unique<ledger::Ledger>(genesis_, ledger::LedgerConfig{cfg_.block_wait_ms});
  rep_.total_before = ledger_->total_currency();

  const bool temp = cfg_.work_dir.empty();
  const std::filesystem::path dir = temp ? fresh_temp_dir() : cfg_.work_dir / "server";
  std::filesystem::create_directories(dir);

  EventLog* log = &rep_.events;
  log->note("scenario", spec_.name);
  log->note("scheme", por::scheme_name(cfg_.scheme));
  log->note("strategy", strategy_name(st_));
  log->number("blocks", static_cast<double>(n_));
  log->number("query_size", static_cast<double>(l));
  log->number("audit_count", static_cast<double>(terms_.audit_count));
  log->number("privacy_cap", static_cast<double>(terms_.privacy_cap));

  owner_ = std::make_unique<Owner>("owner", ok, *ledger_, log, root.fork("scenario/owner"));
  server_ = std::make_unique<Server>("server", sk, *ledger_, log, ServerStore(dir),
                                     root.fork("scenario/server"));
  auditor_ = std::make_unique<Auditor>(auditor_id, owner_audits ? ok : ak, *ledger_, log);

  try {
    if (phases()) session();
  } catch (const Error& err) {
    check_("run-completed", false, err.what());
  }
  finish();
  if (temp) {
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
  return std::move(rep_);
}

// Phases 0 and 1 plus credentials and deposits. False when the run ends
// before a channel can open.
bool Runner::phases() {
  EventLog& log = rep_.events;
  const Economics& e = cfg_.economics;
  log.phase("setup");
  if (auto err = owner_->phase0(terms_, e.c_s + e.c_a, *server_, *auditor_)) {
    check_("setup", false, *err);
    return false;
  }
  ledger_->advance_blocks(1);

  log.phase("upload");
  std::optional<uint64_t> wrong;
  if (st_ == Strategy::kServerClaimWrongBlock) wrong = std::min<uint64_t>(3, n_);
  auto up = owner_->upload(cfg_.data, cfg_.scheme, cfg_.sectors, *server_, wrong,
                           st_ == Strategy::kOwnerDenyCountersign, cfg_.threads);
  rep_.metrics.tag_ms = up.tag_ms;
  rep_.metrics.upload_ms = up.upload_ms;
  rep_.metrics.blocks = n_;
  if (!up.anchored) {
    log.note("abort", up.failure);
    ledger_->advance_blocks(1);
    check_("nothing-anchored", !ledger_->contract().digest.has_value(), up.failure);
    if (st_ == Strategy::kOwnerDenyCountersign) {
      auto err = auditor_->try_submit(TxKind::kOpenChannel, {});
      check_("open-channel-rejected", err.has_value(), err.value_or("channel opened"));
    }
    return false;
  }
  check_("digest-anchored", true, std::to_string(n_) + " block digests");
  ledger_->advance_blocks(1);

  log.phase("credentials");
  if (auto err = owner_->send_creds(auditor_->id())) {
    check_("credentials", false, *err);
    return false;
  }
  if (auto err = server_->try_submit(TxKind::kPostDeposit, u64_payload(e.deposit_s))) {
    check_("server-deposit", false, *err);
    return false;
  }
  if (auto err = auditor_->try_submit(TxKind::kPostDeposit, u64_payload(e.deposit_a))) {
    check_("auditor-deposit", false, *err);
    return false;
  }
  ledger_->advance_blocks(1);
  if (st_ == Strategy::kOwnerDenyPayment) attempt_owner_moves("before-open");
  return true;
}

// Every transaction kind the owner could send, and one it should not know.
// The property: no accepted owner transaction lowers the escrow or raises
// the owner's balance.
void Runner::attempt_owner_moves(std::string_view when) {
  const AccountId owner = owner_->id();
  ledger::ClosePayload close;
  close.scheme = cfg_.scheme;
  close.queries.push_back(por::gen_query(Hash32{}, n_, cfg_.query_size, 0));
  ByteWriter reb;
  reb.field(ByteView{});
  ByteWriter reg;
  terms_.write(reg);
  reg.u64(1);
  ByteWriter party;
  party.field(owner);
  party.field(owner_->verify_key());

  std::vector<std::pair<uint8_t, Bytes>> attempts = {
      {static_cast<uint8_t>(TxKind::kRegisterOwner), std::move(reg).take()},
      {static_cast<uint8_t>(TxKind::kRegisterServer), party.bytes()},
      {static_cast<uint8_t>(TxKind::kRegisterAuditor), party.bytes()},
      {static_cast<uint8_t>(TxKind::kReceiveSignedDigest), {}},
      {static_cast<uint8_t>(TxKind::kPublishCredentials), {}},
      {static_cast<uint8_t>(TxKind::kPostDeposit), u64_payload(1)},
      {static_cast<uint8_t>(TxKind::kOpenChannel), {}},
      {static_cast<uint8_t>(TxKind::kCloseChannel), close.encode()},
      {static_cast<uint8_t>(TxKind::kSubmitRebuttal), std::move(reb).take()},
      {static_cast<uint8_t>(TxKind::kTerminate), {}},
      {0xEE, {}},
  };
  bool held = true;
  size_t accepted = 0;
  std::string detail;
  for (auto& [kind, payload] : attempts) {
    const uint64_t escrow = escrow_total(*ledger_);
    const uint64_t bal = ledger_->balance_of(owner);
    auto err = owner_->try_submit(static_cast<TxKind>(kind), std::move(payload));
    if (!err) ++accepted;
    if (escrow_total(*ledger_) < escrow || ledger_->balance_of(owner) > bal) {
      held = false;
      detail += "kind " + std::to_string(kind) + " moved escrow; ";
    }
  }
  if (detail.empty()) {
    detail = std::to_string(attempts.size()) + " owner transactions, " + std::to_string(accepted) +
             " accepted, escrow untouched";
  }
  check_("owner-cannot-release-escrow/" + std::string(when), held, detail);
}

void Runner::submit_close(Party& who, const ledger::ClosePayload& p) {
  const Bytes bytes = p.encode();
  rep_.metrics.close_payload_bytes = bytes.size();
  rep_.metrics.query_count = p.queries.size();
  if (auto err = who.try_submit(TxKind::kCloseChannel, bytes)) {
    check_("close-accepted", false, *err);
  }
}

void Runner::session() {
  EventLog& log = rep_.events;
  log.phase("audit");
  auditor_->load_credentials();
  if (auto err = auditor_->try_submit(TxKind::kOpenChannel, {})) {
    check_("open-channel", false, *err);
    return;
  }
  const channel::ChannelParams params = channel::params_from_contract(ledger_->contract(), cfg_.scheme);
  if (st_ == Strategy::kOwnerDenyPayment) attempt_owner_moves("channel-open");

  const bool drops = st_ == Strategy::kServerDropBlock || st_ == Strategy::kColludeIgnoreFail ||
                     st_ == Strategy::kColludeSkipIndex;
  if (drops) {
    // h_b is public once the channel opens, so the server knows query 0.
    por::Query q0 = por::gen_query(params.seed, params.n, params.l, 0);
    dropped_ = q0.entries.front().index;
    server_->drop_block(*dropped_);
    server_->restart();
    rep_.catch_probability = catch_probability(params.n, params.l, terms_.audit_count);
    log.number("dropped_block", static_cast<double>(*dropped_));
    log.number("catch_probability", *rep_.catch_probability);
  }

  channel::ChannelParams aparams = params;
  channel::AuditorOptions aopt;
  channel::ServerOptions sopt;
  if (st_ == Strategy::kColludeIgnoreFail) aopt.ignore_failures = true;
  if (st_ == Strategy::kColludeSkipIndex) {
    const uint64_t gone = *dropped_;
    const uint64_t n = params.n;
    aopt.query_filter = [gone, n](por::Query& q) {
      auto hit = std::find_if(q.entries.begin(), q.entries.end(),
                              [&](const por::QueryEntry& e) { return e.index == gone; });
      if (hit == q.entries.end()) return;
      for (uint64_t i = 1; i <= n; ++i) {
        bool used = std::any_of(q.entries.begin(), q.entries.end(),
                                [&](const por::QueryEntry& e) { return e.index == i; });
        if (!used) {
          hit->index = i;
          break;
        }
      }
      std::sort(q.entries.begin(), q.entries.end(),
                [](const por::QueryEntry& a, const por::QueryEntry& b) { return a.index < b.index; });
    };
    sopt.accept_any_query = true;
  }
  if (st_ == Strategy::kAuditorOverQuery) aparams.audit_count = terms_.effective_privacy_cap() + 1;
  if (st_ == Strategy::kAuditorMisrecordResponse || st_ == Strategy::kOwnerAuditorCollude) {
    const uint64_t target = terms_.audit_count / 2;
    auto seen = std::make_shared<uint64_t>(0);
    auto pk = auditor_->pk();
    aopt.record_filter = [target, seen, pk](por::PorResponse& r) {
      if ((*seen)++ != target) return;
      if (r.R) {
        *r.R *= *pk->e_uv();
      } else {
        r.mu[0] += por::Scalar::one();
      }
    };
    log.number("misrecorded_seq", static_cast<double>(target));
  }

  channel::AuditorChannel ach = auditor_->open_session(aparams, server_->verify_key(), aopt);
  channel::ServerChannel sch =
      server_->open_session(params, auditor_->verify_key(), auditor_->pk(), sopt);
  const uint64_t false_complaint_at = std::min<uint64_t>(2, terms_.audit_count - 1);

  for (uint64_t guard = 0; guard < 1'000'000; ++guard) {
    channel::ChannelMsg q = ach.next_query();
    log.msg(auditor_->id(), q);
    auto t0 = std::chrono::steady_clock::now();
    channel::ServerChannel::Reply reply = sch.handle(q);
    rep_.metrics.prove_ms.push_back(ms_since(t0));
    if (reply.complaint != channel::ComplaintReason::kNone) {
      log.complaint(server_->id(), reply.complaint, ach.queries_sent() - 1);
      submit_close(*server_, sch.complaint_payload());
      break;
    }
    log.msg(server_->id(), *reply.response);
    t0 = std::chrono::steady_clock::now();
    auto d = ach.accept(*reply.response);
    rep_.metrics.verify_ms.push_back(ms_since(t0));
    if (d == channel::AuditorChannel::Decision::kContinue) {
      if (st_ == Strategy::kOwnerServerColludeDenyAuditorPay &&
          sch.queries_answered() == false_complaint_at) {
        log.complaint(server_->id(), channel::ComplaintReason::kNone, ach.queries_sent() - 1);
        submit_close(*server_, sch.complaint_payload());
        break;
      }
      continue;
    }
    if (d == channel::AuditorChannel::Decision::kCloseOk) {
      if (st_ == Strategy::kAuditorSuppressQuery) {
        std::vector<por::Query> kept;
        por::Accumulator acc = por::Accumulator::empty(
            cfg_.scheme, cfg_.scheme == Scheme::kAuB ? auditor_->pk()->sectors() : 1);
        for (size_t i = 0; i < ach.sent_queries().size(); ++i) {
          if (i == 1) continue;
          kept.push_back(ach.sent_queries()[i]);
          acc = por::aggregate(std::move(acc), ach.sent_queries()[i], ach.accepted()[i]);
        }
        submit_close(*auditor_,
                     channel::build_close_payload(cfg_.scheme, false, kept, acc, params.fileid));
      } else {
        submit_close(*auditor_, ach.build_close_payload());
      }
      break;
    }
    log.complaint(auditor_->id(), ach.complaint(), ach.queries_sent() - 1);
    submit_close(*auditor_, ach.build_close_payload());
    const ledger::ContractState c = ledger_->contract();
    if (c.channel.status == ledger::ChannelStatus::kDisputed && c.channel.dispute) {
      ByteWriter w;
      w.field(sch.rebuttal(c.channel.dispute->last_query));
      if (auto err = server_->try_submit(TxKind::kSubmitRebuttal, std::move(w).take())) {
        log.note("rebuttal-rejected", *err);
      }
    }
    break;
  }

  if (ledger_->contract().channel.status == ledger::ChannelStatus::kDisputed) {
    ledger_->advance_blocks(terms_.dispute_window + 1);
  } else {
    ledger_->advance_blocks(1);
  }

  log.phase("fetch");
  server_->restart();
  std::optional<uint64_t> corrupt;
  if (st_ == Strategy::kServerWrongFetch) corrupt = 2;
  FetchResult f = owner_->fetch(*server_, corrupt);
  const bool identical = f.data == cfg_.data;
  log.fetch(identical, f.mismatches);
  std::vector<uint64_t> want;
  if (corrupt) want = {*corrupt};
  if (dropped_) want = {*dropped_};
  check_("fetch-digests", f.mismatches == want,
         "mismatches " + join_indices(f.mismatches) + ", expected " + join_indices(want));
  check_("fetch-content", identical == want.empty(),
         identical ? "byte-identical" : "differs from the original");
  rep_.fetch = std::move(f);
}

std::map<std::string, int64_t> Runner::predicted() const {
  std::map<std::string, int64_t> bal;
  for (const auto& g : genesis_) bal[g.id] += static_cast<int64_t>(g.balance);
  const Expectation& x = spec_.expect;
  if (x.outcome == Outcome::kTerminated) return bal;
  const std::string owner = owner_->id(), server = server_->id(), auditor = auditor_->id();
  const auto c_s = static_cast<int64_t>(terms_.c_s), c_a = static_cast<int64_t>(terms_.c_a);
  const auto ds = static_cast<int64_t>(terms_.deposit_s);
  const auto da = static_cast<int64_t>(terms_.deposit_a);
  auto taken = [&](int64_t held) {
    return terms_.penalty == 0 ? held : std::min<int64_t>(held, static_cast<int64_t>(terms_.penalty));
  };
  bal[owner] -= c_s + c_a;
  bal[x.server_paid ? server : owner] += c_s;
  bal[x.auditor_paid ? auditor : owner] += c_a;
  const int64_t ts = x.offender == Off::kServer ? taken(ds) : 0;
  const int64_t ta = x.offender == Off::kAuditor ? taken(da) : 0;
  bal[owner] += ts + ta;
  bal[server] -= ts;
  bal[auditor] -= ta;
  return bal;
}

void Runner::finish() {
  EventLog& log = rep_.events;
  log.phase("settled");
  rep_.verdicts = ledger_->verdicts();
  rep_.balances = ledger_->balances();
  rep_.total_after = ledger_->total_currency();
  rep_.metrics.ledger_wait_ms = ledger_->simulated_wait_ms();
  log.balances("final", rep_.balances);

  const Expectation& x = spec_.expect;
  {
    bool ok = rep_.verdicts.size() == 1;
    std::string detail = std::to_string(rep_.verdicts.size()) + " verdicts";
    if (ok) {
      const ledger::Verdict& v = rep_.verdicts.front();
      ok = v.outcome == x.outcome && x.reasons.count(v.reason) > 0;
      detail = std::string(ledger::outcome_name(v.outcome)) + "/" +
               std::string(ledger::reason_name(v.reason)) + ", expected " +
               std::string(ledger::outcome_name(x.outcome));
    }
    check_("verdict", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (const auto& [id, want] : predicted()) {
      const auto got = static_cast<int64_t>(ledger_->balance_of(id));
      if (got != want) {
        ok = false;
        detail += id + " " + std::to_string(got) + " != " + std::to_string(want) + "; ";
      }
    }
    if (escrow_total(*ledger_) != 0) {
      ok = false;
      detail += "escrow holds " + std::to_string(escrow_total(*ledger_));
    }
    check_("balances", ok, ok ? "match the verdict" : detail);
  }
  {
    uint64_t sum = 0;
    for (const auto& [id, v] : rep_.balances) sum += v;
    const bool ok = rep_.total_before == rep_.total_after && sum == rep_.total_after;
    check_("conservation", ok,
           std::to_string(rep_.total_before) + " before, " + std::to_string(rep_.total_after) +
               " after");
  }
  rep_.passed = std::all_of(rep_.assertions.begin(), rep_.assertions.end(),
                            [](const AssertionResult& a) { return a.passed; });
  log.note("result", rep_.passed ? "match" : "mismatch");
}

}  // namespace

ScenarioReport run_scenario(const ScenarioConfig& config) {
  const ScenarioSpec* spec = find_scenario(config.name);
  PORCHAIN_ENFORCE(spec != nullptr, ParameterError, "unknown scenario " + config.name);
  PORCHAIN_ENFORCE(std::find(spec->schemes.begin(), spec->schemes.end(), config.scheme) !=
                       spec->schemes.end(),
                   ParameterError,
                   config.name + " does not apply to " + std::string(por::scheme_name(config.scheme)));
  Runner r(config, *spec);
  return r.run();
}

}  // namespace porchain::actors
