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

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "porchain/common/error.hpp"
#include "porchain/ledger/contract.hpp"

namespace porchain::ledger {

// A transaction the contract refused. Ledger state is unchanged.
class TxRejected : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

struct BlockHeader {
  uint64_t height = 0;
  Hash32 parent_hash{};
  Hash32 tx_root{};
  Hash32 header_hash{};
  std::vector<Hash32> tx_hashes;
};

// header_hash = SHA-256(be8(height) || parent_hash || tx_root), with
// tx_root = SHA-256 over the concatenated transaction hashes.
Hash32 compute_tx_root(const std::vector<Hash32>& tx_hashes);
Hash32 compute_header_hash(uint64_t height, const Hash32& parent, const Hash32& tx_root);

struct GenesisAccount {
  AccountId id;
  Bytes verify_key;
  uint64_t balance = 0;
};

struct LedgerConfig {
  double block_wait_ms = 0;  // simulated latency charged per sealed block
};

struct Receipt {
  Hash32 tx_hash{};
  std::optional<Verdict> verdict;
};

// Simulated chain plus the storage audit contract. Transactions apply in
// the order submitted and are sealed into the next block; all calls are
// serialized by one mutex.
class Ledger {
 public:
  explicit Ledger(std::vector<GenesisAccount> genesis, LedgerConfig config = {});
  ~Ledger();
  Ledger(const Ledger&) = delete;
  Ledger& operator=(const Ledger&) = delete;

  // Rebuilds a ledger by re-executing a transaction log.
  static std::unique_ptr<Ledger> replay(ByteView log, LedgerConfig config = {});

  // Throws TxRejected; the attempt is still appended to the log.
  Receipt submit(const Transaction& tx);
  void advance_blocks(uint64_t count);

  uint64_t height() const;
  Hash32 last_block_hash() const;
  std::vector<BlockHeader> chain() const;
  uint64_t next_seq(const AccountId& id) const;
  uint64_t balance_of(const std::string& id) const;  // accounts and escrow buckets
  std::map<std::string, uint64_t> balances() const;
  uint64_t total_currency() const;
  ContractState contract() const;
  std::vector<Verdict> verdicts() const;
  // Cached h_b of the open channel (nullopt outside a channel).
  std::optional<Hash32> channel_seed() const;
  double simulated_wait_ms() const;

  Hash32 state_digest() const;
  Bytes transaction_log() const;

 private:
  struct State;
  Receipt apply(const Transaction& tx);
  void seal_block();
  void expire_disputes();

  mutable std::mutex mu_;
  LedgerConfig config_;
  std::unique_ptr<State> st_;
};

}  // namespace porchain::ledger
