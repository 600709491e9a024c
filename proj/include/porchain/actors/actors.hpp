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

#include "porchain/actors/store.hpp"
#include "porchain/channel/channel.hpp"
#include "porchain/ledger/ledger.hpp"

namespace porchain::actors {

using ledger::AccountId;

// Ordered JSON-lines record of one run. Lines carry no wall-clock data so
// seeded runs reproduce byte for byte.
class EventLog {
 public:
  void phase(std::string_view name, std::string_view detail = {});
  void tx(const ledger::Transaction& tx, bool accepted, std::string_view error);
  void msg(std::string_view from, const channel::ChannelMsg& m);
  void complaint(std::string_view by, channel::ComplaintReason reason, uint64_t last_seq);
  void verdict(const ledger::Verdict& v);
  void balances(std::string_view label, const std::map<std::string, uint64_t>& b);
  void fetch(bool byte_identical, const std::vector<uint64_t>& mismatches);
  void assertion(std::string_view name, bool passed, std::string_view detail);
  void note(std::string_view key, std::string_view value);
  void number(std::string_view key, double value);

  const std::vector<std::string>& lines() const { return lines_; }
  std::string jsonl() const;

 private:
  std::vector<std::string> lines_;
};

// Identity on the ledger: submits signed transactions with the right
// sequence number and records each attempt.
class Party {
 public:
  Party(AccountId id, crypto::SigKeypair key, ledger::Ledger& ledger, EventLog* log);

  const AccountId& id() const { return id_; }
  const crypto::SigKeypair& key() const { return key_; }
  const Bytes& verify_key() const { return key_.verify_key; }

  // Throws ledger::TxRejected.
  ledger::Receipt submit(ledger::TxKind kind, Bytes payload);
  // Returns the rejection message instead of throwing.
  std::optional<std::string> try_submit(ledger::TxKind kind, Bytes payload,
                                        ledger::Receipt* out = nullptr);

 protected:
  AccountId id_;
  crypto::SigKeypair key_;
  ledger::Ledger& ledger_;
  EventLog* log_;
};

struct DigestAck {
  std::vector<Hash32> h;
  Bytes server_sig;
};

struct FetchedFile {
  std::vector<por::Block> blocks;
  std::vector<por::G1> tags;
};

class Server : public Party {
 public:
  Server(AccountId id, crypto::SigKeypair key, ledger::Ledger& ledger, EventLog* log,
         ServerStore store, crypto::XofSampler rng);

  // Stores the file and answers with its own digest list, signed. A set
  // `wrong_index` reports an altered h for that block.
  DigestAck receive_file(const por::TaggedFile& file, std::optional<uint64_t> wrong_index = {});
  // Deletes block `index` (sectors become zero) in memory and on disk.
  void drop_block(uint64_t index);
  // Re-reads the file from disk, as after a process restart.
  void restart();
  // Blocks and tags for the owner; `corrupt_index` flips one sector.
  FetchedFile send_file(std::optional<uint64_t> corrupt_index = {}) const;

  channel::ServerChannel open_session(const channel::ChannelParams& params,
                                      const Bytes& auditor_vk,
                                      std::shared_ptr<const por::PublicKey> pk,
                                      channel::ServerOptions options = {});

  std::shared_ptr<const por::TaggedFile> file() const { return file_; }
  const ServerStore& store() const { return store_; }

 private:
  ServerStore store_;
  crypto::XofSampler rng_;
  std::shared_ptr<const por::TaggedFile> file_;
};

struct FetchResult {
  Bytes data;
  std::vector<uint64_t> mismatches;  // 1-based block indices failing h_i
  bool ok() const { return mismatches.empty(); }
};

class Owner : public Party {
 public:
  Owner(AccountId id, crypto::SigKeypair key, ledger::Ledger& ledger, EventLog* log,
        crypto::XofSampler rng);

  // Registers itself with the terms and the two counterparties. Returns the
  // first rejection message, or nullopt when all registrations succeeded.
  std::optional<std::string> phase0(const ledger::ContractTerms& terms, uint64_t deposit,
                                    const Party& server, const Party& auditor);

  struct UploadResult {
    bool anchored = false;
    std::string failure;
    double tag_ms = 0;
    double upload_ms = 0;
  };
  // Tags, sends, checks the server's digest list and countersigns. On a
  // mismatch (or when `deny_countersign`) the owner terminates instead.
  UploadResult upload(ByteView data, por::Scheme scheme, size_t sectors, Server& server,
                      std::optional<uint64_t> server_wrong_index, bool deny_countersign,
                      unsigned threads = 1);
  std::optional<std::string> send_creds(const AccountId& auditor);
  // Fails with ProtocolError before a successful upload.
  FetchResult fetch(const Server& server, std::optional<uint64_t> corrupt_index = {}) const;

  const por::OwnerKeys& keys() const { return *keys_; }
  const por::TaggedFile& tagged() const { return *tagged_; }
  const std::optional<por::Scalar>& fileid() const { return fileid_; }

 private:
  crypto::XofSampler rng_;
  std::optional<por::OwnerKeys> keys_;
  std::optional<por::TaggedFile> tagged_;
  std::optional<por::Scalar> fileid_;
  std::vector<Hash32> anchored_;
};

class Auditor : public Party {
 public:
  using Party::Party;

  // Reads the credentials the owner published through the contract.
  void load_credentials();
  channel::AuditorChannel open_session(const channel::ChannelParams& params,
                                       const Bytes& server_vk,
                                       channel::AuditorOptions options = {});
  std::shared_ptr<const por::PublicKey> pk() const { return pk_; }

 private:
  std::shared_ptr<const por::PublicKey> pk_;
};

}  // namespace porchain::actors
