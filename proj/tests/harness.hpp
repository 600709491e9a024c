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

// A three-party ledger with a small file, driven one phase at a time.

#include <atomic>
#include <filesystem>
#include <memory>
#include <unistd.h>

#include "porchain/actors/actors.hpp"
#include "porchain/common/error.hpp"

namespace porchain::testing {

inline Hash32 seed_from(uint64_t v) {
  Hash32 s{};
  for (int k = 0; k < 8; ++k) s[31 - k] = static_cast<uint8_t>(v >> (8 * k));
  return s;
}

inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("porchain-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
              std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline Bytes u64_payload(uint64_t v) {
  ByteWriter w;
  w.u64(v);
  return std::move(w).take();
}

struct Harness {
  por::Scheme scheme;
  crypto::XofSampler rng;
  crypto::SigKeypair ok, sk, ak, mk;  // owner, server, auditor, a stranger
  ledger::ContractTerms terms;
  std::unique_ptr<ledger::Ledger> ledger;
  actors::EventLog log;
  std::filesystem::path dir;
  std::unique_ptr<actors::Owner> owner;
  std::unique_ptr<actors::Server> server;
  std::unique_ptr<actors::Auditor> auditor;
  Bytes data;
  size_t sectors = 4;

  explicit Harness(por::Scheme s = por::Scheme::kPPAuB, uint64_t seed = 1, uint64_t blocks = 8)
      : scheme(s), rng(seed_from(seed), "test/harness") {
    ok = crypto::SigKeypair::generate(rng);
    sk = crypto::SigKeypair::generate(rng);
    ak = crypto::SigKeypair::generate(rng);
    mk = crypto::SigKeypair::generate(rng);
    terms.audit_count = 3;
    terms.c_s = 300;
    terms.c_a = 200;
    terms.deposit_s = 1000;
    terms.deposit_a = 1000;
    terms.dispute_window = 3;
    terms.query_size = 2;
    terms.privacy_cap = 4;
    ledger = std::make_unique<ledger::Ledger>(std::vector<ledger::GenesisAccount>{
        {"owner", ok.verify_key, 10'000},
        {"server", sk.verify_key, 5'000},
        {"auditor", ak.verify_key, 5'000},
        {"mallory", mk.verify_key, 5'000}});
    dir = scratch_dir("harness");
    owner = std::make_unique<actors::Owner>("owner", ok, *ledger, &log, rng.fork("owner"));
    server = std::make_unique<actors::Server>("server", sk, *ledger, &log,
                                              actors::ServerStore(dir), rng.fork("server"));
    auditor = std::make_unique<actors::Auditor>("auditor", ak, *ledger, &log);
    const size_t per_block = (s == por::Scheme::kAuB ? sectors : 1) * por::default_sector_width();
    data = rng.bytes(blocks * per_block);
  }
  ~Harness() {
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }

  ledger::Transaction tx(const std::string& who, const crypto::SigKeypair& key,
                         ledger::TxKind kind, Bytes payload) const {
    return ledger::make_tx(kind, who, ledger->next_seq(who), std::move(payload), key);
  }

  void register_all() {
    auto err = owner->phase0(terms, terms.c_s + terms.c_a, *server, *auditor);
    if (err) throw ProtocolError("phase 0: " + *err);
    ledger->advance_blocks(1);
  }
  void upload() {
    auto r = owner->upload(data, scheme, sectors, *server, std::nullopt, false);
    if (!r.anchored) throw ProtocolError("upload: " + r.failure);
    ledger->advance_blocks(1);
  }
  void creds_and_deposits() {
    if (auto err = owner->send_creds("auditor")) throw ProtocolError(*err);
    server->submit(ledger::TxKind::kPostDeposit, u64_payload(terms.deposit_s));
    auditor->submit(ledger::TxKind::kPostDeposit, u64_payload(terms.deposit_a));
    ledger->advance_blocks(1);
    auditor->load_credentials();
  }
  void open() { auditor->submit(ledger::TxKind::kOpenChannel, {}); }
  void ready() {
    register_all();
    upload();
    creds_and_deposits();
  }

  struct Session {
    channel::AuditorChannel a;
    channel::ServerChannel s;
  };
  Session session(channel::AuditorOptions ao = {}, channel::ServerOptions so = {}) {
    auto params = channel::params_from_contract(ledger->contract(), scheme);
    return Session{auditor->open_session(params, server->verify_key(), std::move(ao)),
                   server->open_session(params, auditor->verify_key(), auditor->pk(), so)};
  }
  // Runs up to `rounds` query/response exchanges; stops early on a decision
  // other than continue.
  static void exchange(Session& s, uint64_t rounds) {
    for (uint64_t i = 0; i < rounds; ++i) {
      auto reply = s.s.handle(s.a.next_query());
      if (!reply.response) return;
      if (s.a.accept(*reply.response) != channel::AuditorChannel::Decision::kContinue) return;
    }
  }
};

}  // namespace porchain::testing
