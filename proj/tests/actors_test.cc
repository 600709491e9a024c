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

#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "harness.hpp"
#include "porchain/actors/scenario.hpp"

namespace porchain::actors {
namespace {

using testing::Harness;
using testing::scratch_dir;
using testing::seed_from;

TEST(ServerStore, SurvivesRestart) {
  Harness h;
  h.register_all();
  h.upload();
  const por::TaggedFile& sent = h.owner->tagged();
  ServerStore again(h.dir);  // a new process opening the same directory
  ASSERT_TRUE(again.exists());
  por::TaggedFile loaded = again.load();
  EXPECT_EQ(loaded.layout, sent.layout);
  EXPECT_EQ(loaded.blocks, sent.blocks);
  EXPECT_EQ(loaded.tags, sent.tags);
  EXPECT_EQ(loaded.digests, h.ledger->contract().digest->h);

  h.server->restart();
  FetchResult f = h.owner->fetch(*h.server);
  EXPECT_TRUE(f.ok());
  EXPECT_EQ(f.data, h.data);
}

TEST(ServerStore, MissingAndCorrupt) {
  auto dir = scratch_dir("store");
  ServerStore s(dir);
  EXPECT_FALSE(s.exists());
  EXPECT_THROW(s.load(), IoError);
  Harness h;
  h.register_all();
  h.upload();
  s.save(h.owner->tagged());
  EXPECT_TRUE(s.exists());
  {
    std::fstream f(s.tags_path(), std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.put('X');
  }
  EXPECT_THROW(s.load(), FormatError);
  s.clear();
  EXPECT_FALSE(s.exists());
  std::filesystem::remove_all(dir);
}

TEST(Server, DroppedBlockPersists) {
  Harness h;
  h.register_all();
  h.upload();
  h.server->drop_block(2);
  h.server->restart();
  FetchResult f = h.owner->fetch(*h.server);
  EXPECT_EQ(f.mismatches, std::vector<uint64_t>{2});
  EXPECT_THROW(h.server->drop_block(0), ParameterError);
  EXPECT_THROW(h.server->drop_block(1000), ParameterError);
}

TEST(Owner, FetchBeforeUploadFails) {
  Harness h;
  h.register_all();
  EXPECT_THROW(h.owner->fetch(*h.server), ProtocolError);
}

TEST(Owner, UnderDepositAbortsThenRetrySucceeds) {
  Harness h;
  auto err = h.owner->phase0(h.terms, h.terms.c_s + h.terms.c_a - 1, *h.server, *h.auditor);
  ASSERT_TRUE(err.has_value());
  EXPECT_FALSE(h.ledger->contract().owner_id);
  EXPECT_FALSE(h.owner->phase0(h.terms, h.terms.c_s + h.terms.c_a, *h.server, *h.auditor));
  EXPECT_EQ(h.ledger->contract().server_id, "server");
  EXPECT_EQ(h.ledger->contract().auditor_id, "auditor");
}

TEST(Owner, WrongDigestTerminatesBeforeAnchoring) {
  Harness h;
  h.register_all();
  auto r = h.owner->upload(h.data, h.scheme, h.sectors, *h.server, 3, false);
  EXPECT_FALSE(r.anchored);
  EXPECT_NE(r.failure.find("block 3"), std::string::npos);
  EXPECT_FALSE(h.ledger->contract().digest);
  EXPECT_TRUE(h.ledger->contract().terminated);
  EXPECT_EQ(h.ledger->balance_of("owner"), 10'000u);
}

TEST(Owner, WrongFetchReportedPerBlock) {
  for (por::Scheme scheme : {por::Scheme::kAuB, por::Scheme::kPPAuB}) {
    Harness h(scheme);
    h.register_all();
    h.upload();
    FetchResult f = h.owner->fetch(*h.server, 2);
    EXPECT_EQ(f.mismatches, std::vector<uint64_t>{2});
    EXPECT_NE(f.data, h.data);
    EXPECT_TRUE(h.owner->fetch(*h.server).ok());
  }
}

TEST(Owner, CredentialsCarryFileid) {
  Harness h(por::Scheme::kPPAuB);
  h.register_all();
  h.upload();
  ASSERT_FALSE(h.owner->send_creds("auditor"));
  h.auditor->load_credentials();
  EXPECT_EQ(h.auditor->pk()->scheme(), por::Scheme::kPPAuB);
  ASSERT_TRUE(h.ledger->contract().fileid);
  EXPECT_EQ(*h.ledger->contract().fileid, *h.owner->fileid());
}

ScenarioConfig small(const std::string& name, por::Scheme scheme, uint64_t seed = 1) {
  ScenarioConfig c;
  c.name = name;
  c.scheme = scheme;
  c.seed = seed_from(seed);
  crypto::XofSampler rng(c.seed, "test/file");
  c.data = rng.bytes(6000);
  c.sectors = 8;
  c.audit_count = 4;
  c.query_size = 3;
  return c;
}

TEST(Scenario, RegistryCoversEveryStrategy) {
  std::set<Strategy> seen;
  for (const ScenarioSpec& s : scenario_registry()) seen.insert(s.strategy);
  EXPECT_EQ(seen.size(), 13u);
  EXPECT_EQ(scenario_registry().size(), 13u);
  EXPECT_EQ(find_scenario("nope"), nullptr);
  EXPECT_NE(find_scenario("case4-skipindex"), nullptr);
}

TEST(Scenario, UnknownOrInapplicableRejected) {
  EXPECT_THROW(run_scenario(small("nope", por::Scheme::kAuB)), ParameterError);
  EXPECT_THROW(run_scenario(small("case2-overquery", por::Scheme::kPPAuB)), ParameterError);
  ScenarioConfig c = small("honest", por::Scheme::kAuB);
  c.query_size = 1000;
  EXPECT_THROW(run_scenario(c), ParameterError);
  c = small("honest", por::Scheme::kAuB);
  c.data.clear();
  EXPECT_THROW(run_scenario(c), ParameterError);
}

TEST(Scenario, HonestNeverPenalizes) {
  struct Combo {
    uint64_t l, k;
  };
  for (por::Scheme scheme : {por::Scheme::kAuB, por::Scheme::kPPAuB}) {
    for (Combo c : {Combo{1, 1}, Combo{2, 3}, Combo{3, 7}, Combo{5, 2}}) {
      ScenarioConfig cfg = small("honest", scheme, 10 * c.l + c.k);
      cfg.query_size = c.l;
      cfg.audit_count = c.k;
      ScenarioReport r = run_scenario(cfg);
      EXPECT_TRUE(r.passed) << por::scheme_name(scheme) << " l=" << c.l << " k=" << c.k;
      ASSERT_EQ(r.verdicts.size(), 1u);
      EXPECT_EQ(r.verdicts[0].outcome, ledger::Outcome::kPaidBoth);
      for (const auto& t : r.verdicts[0].transfers) EXPECT_NE(t.kind, ledger::TransferKind::kPenalty);
      EXPECT_EQ(r.metrics.query_count, c.k);
    }
  }
}

TEST(Scenario, ReportIsReproducible) {
  ScenarioReport a = run_scenario(small("case2-misrecord", por::Scheme::kPPAuB, 5));
  ScenarioReport b = run_scenario(small("case2-misrecord", por::Scheme::kPPAuB, 5));
  ScenarioReport c = run_scenario(small("case2-misrecord", por::Scheme::kPPAuB, 6));
  EXPECT_EQ(a.events.jsonl(), b.events.jsonl());
  EXPECT_NE(a.events.jsonl(), c.events.jsonl());
  EXPECT_EQ(a.metrics.close_payload_bytes, b.metrics.close_payload_bytes);
}

TEST(Scenario, EventsAreJsonLines) {
  ScenarioReport r = run_scenario(small("case1-dropblock", por::Scheme::kAuB));
  std::set<std::string> kinds;
  for (const std::string& line : r.events.lines()) {
    auto j = nlohmann::json::parse(line);
    ASSERT_TRUE(j.contains("event"));
    kinds.insert(j["event"].get<std::string>());
  }
  for (const char* k : {"phase", "tx", "msg", "complaint", "verdict", "balances", "fetch", "assertion"}) {
    EXPECT_TRUE(kinds.count(k)) << k;
  }
  EXPECT_TRUE(r.passed);
  ASSERT_TRUE(r.catch_probability);
  EXPECT_GT(*r.catch_probability, 0.0);
}

TEST(Scenario, DropBlockIsTheChallengedOne) {
  for (por::Scheme scheme : {por::Scheme::kAuB, por::Scheme::kPPAuB}) {
    ScenarioReport r = run_scenario(small("case1-dropblock", scheme, 3));
    ASSERT_TRUE(r.fetch);
    ASSERT_EQ(r.fetch->mismatches.size(), 1u);
    EXPECT_TRUE(r.passed);
    ASSERT_EQ(r.verdicts.size(), 1u);
    EXPECT_EQ(r.verdicts[0].outcome, ledger::Outcome::kPenalizeServer);
  }
}

TEST(Scenario, OwnerAsAuditorHasNoSeparateAccount) {
  ScenarioReport r = run_scenario(small("case5-owner-auditor", por::Scheme::kAuB));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.balances.count("auditor"), 0u);
}

TEST(CatchProbability, Formula) {
  EXPECT_DOUBLE_EQ(catch_probability(10, 1, 1), 0.1);
  EXPECT_DOUBLE_EQ(catch_probability(10, 10, 1), 1.0);
  EXPECT_NEAR(catch_probability(100, 5, 10), 1 - std::pow(0.95, 10), 1e-12);
}

TEST(EventLog, Formats) {
  EventLog log;
  log.phase("x", "y");
  log.number("k", 1.5);
  log.balances("final", {{"a", 1}, {"b", 2}});
  ASSERT_EQ(log.lines().size(), 3u);
  auto j = nlohmann::json::parse(log.lines()[2]);
  EXPECT_EQ(j["total"], 3);
  EXPECT_EQ(log.jsonl().back(), '\n');
}

}  // namespace
}  // namespace porchain::actors
