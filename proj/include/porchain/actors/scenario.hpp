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

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "porchain/actors/actors.hpp"

namespace porchain::actors {

// Deviations injected into an otherwise honest run. Each one exercises a
// single misbehaviour case.
enum class Strategy {
  kHonest,
  kServerDropBlock,         // deletes a block that the first query challenges
  kServerClaimWrongBlock,   // reports an altered digest for block 3 at upload
  kServerWrongFetch,        // returns a corrupted block 2 on download
  kAuditorOverQuery,        // asks one query beyond the privacy cap (AuB)
  kAuditorMisrecordResponse,  // stores a modified response, then complains
  kAuditorSuppressQuery,    // leaves query 1 out of the close payload
  kOwnerDenyPayment,        // tries every owner operation that could move escrow
  kOwnerDenyCountersign,    // never countersigns the digest list
  kColludeIgnoreFail,       // server drops a block, auditor closes anyway
  kColludeSkipIndex,        // auditor swaps out the dropped index, server plays along
  kOwnerAuditorCollude,     // owner acts as auditor and misrecords
  kOwnerServerColludeDenyAuditorPay,  // server raises a false complaint
};

std::string_view strategy_name(Strategy s);

// What the contract must decide for a scenario. Balances are then fully
// determined by the terms.
struct Expectation {
  ledger::Outcome outcome = ledger::Outcome::kPaidBoth;
  std::set<ledger::Reason> reasons;  // any of these is acceptable
  bool server_paid = true;
  bool auditor_paid = true;
  enum class Offender { kNone, kServer, kAuditor } offender = Offender::kNone;
};

struct ScenarioSpec {
  std::string name;
  Strategy strategy = Strategy::kHonest;
  std::vector<por::Scheme> schemes;
  Expectation expect;
  std::string summary;
};

const std::vector<ScenarioSpec>& scenario_registry();
// nullptr when unknown.
const ScenarioSpec* find_scenario(std::string_view name);

struct Economics {
  uint64_t owner_balance = 10'000;
  uint64_t server_balance = 5'000;
  uint64_t auditor_balance = 5'000;
  uint64_t c_s = 300;
  uint64_t c_a = 200;
  uint64_t deposit_s = 1'000;
  uint64_t deposit_a = 1'000;
  uint64_t penalty = 0;  // whole stake
  uint64_t dispute_window = 3;
};

struct ScenarioConfig {
  std::string name = "honest";
  por::Scheme scheme = por::Scheme::kAuB;
  Bytes data;                  // file to store; must be non-empty
  uint64_t audit_count = 10;   // K
  uint64_t query_size = 5;     // l
  Hash32 seed{};
  std::optional<uint64_t> privacy_cap;  // default max(l - 1, K)
  size_t sectors = 1000;       // AuB only
  Economics economics;
  double block_wait_ms = 0;
  std::filesystem::path work_dir;  // server store; a temp dir when empty
  unsigned threads = 1;
};

struct RunMetrics {
  double upload_ms = 0;
  double tag_ms = 0;
  std::vector<double> prove_ms;   // per audit
  std::vector<double> verify_ms;  // per audit
  double ledger_wait_ms = 0;
  uint64_t close_payload_bytes = 0;
  uint64_t query_count = 0;
  uint64_t blocks = 0;

  static std::string csv_header();
  std::string csv_row() const;
};

struct AssertionResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ScenarioReport {
  std::string name;
  por::Scheme scheme = por::Scheme::kAuB;
  std::vector<ledger::Verdict> verdicts;
  std::map<std::string, uint64_t> balances;
  uint64_t total_before = 0;
  uint64_t total_after = 0;
  std::vector<AssertionResult> assertions;
  std::optional<double> catch_probability;
  std::optional<FetchResult> fetch;
  RunMetrics metrics;
  EventLog events;
  bool passed = false;

  const AssertionResult* assertion(std::string_view name) const;
};

// 1 - ((n - l) / n)^K: chance that K independent queries of l distinct
// indices touch one fixed block.
double catch_probability(uint64_t n, uint64_t l, uint64_t k);

// Runs a full session on a fresh ledger. Throws ParameterError for an
// unknown scenario or one that does not apply to the scheme; misbehaviour
// itself ends up in the report.
ScenarioReport run_scenario(const ScenarioConfig& config);

}  // namespace porchain::actors
