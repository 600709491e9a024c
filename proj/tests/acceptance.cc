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

// Acceptance checks. Each criterion prints one PASS/FAIL line with the
// tolerance it was held to. `--only N` runs a single criterion.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>

#include "harness.hpp"
#include "oracle.hpp"
#include "porchain/actors/scenario.hpp"
#include "porchain/channel/channel.hpp"
#include "porchain/crypto/hash.hpp"
#include "porchain/por/file.hpp"
#include "porchain/por/response.hpp"
#include "porchain/por/verify.hpp"

namespace porchain {
namespace {

using crypto::PairingSuite;
using crypto::XofSampler;
using por::Scheme;
using por::VerifyStatus;
using testing::seed_from;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Hash32 trial_seed(uint64_t criterion, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  Bytes m;
  for (uint64_t v : {criterion, a, b, c}) {
    Bytes x = u64_be(v);
    m.insert(m.end(), x.begin(), x.end());
  }
  return crypto::sha256(m);
}

struct Fixture {
  por::OwnerKeys keys;
  por::PorParams params;
  por::TaggedFile file;
};

// Exactly n blocks of s sectors.
Fixture fixture(Scheme scheme, size_t s, uint64_t n, XofSampler& rng) {
  const auto suite = PairingSuite::bls12_381();
  Fixture f{scheme == Scheme::kAuB ? por::keygen_aub(suite, s, rng) : por::keygen_ppaub(suite, rng),
            scheme == Scheme::kAuB ? por::PorParams::aub(s) : por::PorParams::ppaub(),
            {}};
  if (scheme == Scheme::kPPAuB) f.params.fileid = rng.scalar();
  f.file = por::tag_file(rng.bytes(n * f.params.block_bytes()), f.params, f.keys);
  return f;
}

por::PorResponse respond(const Fixture& f, const por::Query& q, XofSampler& rng,
                         por::Scalar* r_out = nullptr) {
  if (f.params.scheme == Scheme::kAuB) return por::gen_response_aub(q, f.file);
  por::PpaubProof p = por::gen_response_ppaub(q, f.file, f.keys.pk, true, std::nullopt, rng);
  if (r_out) *r_out = p.r;
  return p.response;
}

VerifyStatus check(const Fixture& f, const por::Query& q, const por::PorResponse& r) {
  return por::verify_response(q.entries, r, f.keys.pk, f.params.fileid);
}

// --- 1 ---------------------------------------------------------------------

Outcome scheme_correctness() {
  constexpr int kTrials = 100;
  constexpr double kBudgetSeconds = 300;
  const auto t0 = std::chrono::steady_clock::now();
  int aub_ok = 0, aub_all = 0, pp_ok = 0, pp_all = 0;
  for (size_t s : {size_t{1}, size_t{1000}}) {
    for (uint64_t n : {1, 4, 16, 64}) {
      for (int t = 0; t < kTrials; ++t) {
        XofSampler rng(trial_seed(1, s, n, t), "acceptance");
        Fixture f = fixture(Scheme::kAuB, s, n, rng);
        const uint64_t l = 1 + rng.uniform(n);
        por::Query q = por::gen_query(rng.bytes32(), n, l, 0);
        ++aub_all;
        aub_ok += check(f, q, respond(f, q, rng)) == VerifyStatus::kValid;
      }
    }
  }
  for (uint64_t n : {1, 4, 16, 64}) {
    for (int t = 0; t < kTrials; ++t) {
      XofSampler rng(trial_seed(1, 0, n, t), "acceptance");
      Fixture f = fixture(Scheme::kPPAuB, 1, n, rng);
      const uint64_t l = 1 + rng.uniform(n);
      por::Query q = por::gen_query(rng.bytes32(), n, l, 0);
      ++pp_all;
      pp_ok += check(f, q, respond(f, q, rng)) == VerifyStatus::kValid;
    }
  }
  const double secs = secs_since(t0);
  return {aub_ok == aub_all && pp_ok == pp_all && secs < kBudgetSeconds,
          fmt("AuB %d/%d over n in {1,4,16,64} x s in {1,1000}, PPAuB %d/%d over n in "
              "{1,4,16,64}; required all; %.1f s (budget < %.0f s)",
              aub_ok, aub_all, pp_ok, pp_all, secs, kBudgetSeconds)};
}

// --- 2 ---------------------------------------------------------------------

enum class Target { kSector, kTag, kMu, kSigma, kR };

const char* target_name(Target t) {
  switch (t) {
    case Target::kSector: return "sector";
    case Target::kTag: return "tag";
    case Target::kMu: return "mu";
    case Target::kSigma: return "sigma";
    case Target::kR: return "R";
  }
  return "?";
}

por::Scalar nonzero(XofSampler& rng) {
  for (;;) {
    por::Scalar x = rng.scalar();
    if (!x.is_zero()) return x;
  }
}

Outcome tamper_detection() {
  constexpr int kTrials = 100;
  std::string detail;
  bool pass = true;
  int total = 0;
  for (Scheme scheme : {Scheme::kAuB, Scheme::kPPAuB}) {
    std::vector<Target> targets = {Target::kSector, Target::kTag, Target::kMu, Target::kSigma};
    if (scheme == Scheme::kPPAuB) targets.push_back(Target::kR);
    for (Target target : targets) {
      int caught = 0, controls = 0;
      for (int t = 0; t < kTrials; ++t) {
        XofSampler rng(trial_seed(2, static_cast<uint64_t>(scheme), static_cast<uint64_t>(target), t),
                       "acceptance");
        Fixture f = fixture(scheme, scheme == Scheme::kAuB ? 8 : 1, 16, rng);
        const uint64_t l = 1 + rng.uniform(16);
        por::Query q = por::gen_query(rng.bytes32(), 16, l, 0);
        XofSampler mask = rng.fork("mask");
        XofSampler mask_copy = mask;
        controls += check(f, q, respond(f, q, mask_copy)) == VerifyStatus::kValid;

        const por::QueryEntry& e = q.entries[rng.uniform(q.entries.size())];
        por::PorResponse r;
        if (target == Target::kSector || target == Target::kTag) {
          Fixture g = f;
          if (target == Target::kSector) {
            g.file.blocks[e.index - 1][rng.uniform(g.file.layout.s)] += nonzero(rng);
          } else {
            g.file.tags[e.index - 1] += crypto::hash_to_g1("TEST/TAMPER", rng.bytes(16));
          }
          r = respond(g, q, mask);
        } else {
          r = respond(f, q, mask);
          if (target == Target::kMu) r.mu[rng.uniform(r.mu.size())] += nonzero(rng);
          if (target == Target::kSigma) r.sigma += crypto::hash_to_g1("TEST/TAMPER", rng.bytes(16));
          if (target == Target::kR) *r.R *= f.keys.pk.e_uv()->pow(nonzero(rng));
        }
        caught += check(f, q, r) != VerifyStatus::kValid;
      }
      total += kTrials;
      pass = pass && caught == kTrials && controls == kTrials;
      detail += fmt("%s/%s %d/%d; ", por::scheme_name(scheme).data(), target_name(target), caught,
                    kTrials);
    }
  }
  return {pass, detail + fmt("required %d/%d each, untampered controls all valid", kTrials, kTrials)};
}

// --- 3 ---------------------------------------------------------------------

Outcome aggregation_oracle() {
  constexpr int kTrials = 200;
  int agree = 0, valid = 0, invalid = 0;
  for (int t = 0; t < kTrials; ++t) {
    XofSampler rng(trial_seed(3, t), "acceptance");
    const Scheme scheme = t % 2 ? Scheme::kPPAuB : Scheme::kAuB;
    const uint64_t n = 1 + rng.uniform(32);
    const uint64_t k = 1 + rng.uniform(10);
    const uint64_t l = 1 + rng.uniform(n);
    Fixture f = fixture(scheme, scheme == Scheme::kAuB ? 4 : 1, n, rng);
    const Hash32 seed = rng.bytes32();
    const bool tamper = rng.uniform(2) == 1;
    const uint64_t bad = rng.uniform(k);

    XofSampler mask = rng.fork("mask");
    por::Accumulator acc = por::Accumulator::empty(scheme, f.file.layout.s);
    std::optional<por::Scalar> r;
    bool brute = true;
    for (uint64_t j = 0; j < k; ++j) {
      por::Query q = por::gen_query(seed, n, l, j);
      por::PorResponse resp;
      if (scheme == Scheme::kAuB) {
        resp = por::gen_response_aub(q, f.file);
      } else {
        por::PpaubProof p = por::gen_response_ppaub(q, f.file, f.keys.pk, j == 0, r, mask);
        r = p.r;
        resp = p.response;
      }
      if (tamper && j == bad) resp.mu[0] += nonzero(rng);
      // Brute force: each response on its own. A PPAuB response after the
      // first is checked with the session mask put back in.
      por::PorResponse alone = resp;
      if (scheme == Scheme::kPPAuB && j > 0) alone.mu[0] += *r;
      brute = brute && check(f, q, alone) == VerifyStatus::kValid;
      acc = por::aggregate(std::move(acc), q, resp);
    }
    // What the contract does on close: one check over the encoded aggregate.
    const VerifyStatus agg =
        por::verify_encoded(acc.q_all, acc.as_response().encode_proof(), f.keys.pk, f.params.fileid);
    const bool contract = agg == VerifyStatus::kValid;
    agree += contract == brute;
    (brute ? valid : invalid)++;
  }
  return {agree == kTrials,
          fmt("%d/%d trials agree (%d all-valid, %d with a bad response), k <= 10, n <= 32; "
              "required all",
              agree, kTrials, valid, invalid)};
}

// --- 4 ---------------------------------------------------------------------

Outcome query_regeneration() {
  constexpr int kSessions = 100;
  testing::Harness h(Scheme::kPPAuB, 4, 16);
  h.terms.c_s = 3;
  h.terms.c_a = 2;
  h.terms.deposit_s = 10;
  h.terms.deposit_a = 10;
  h.terms.audit_count = 4;
  h.terms.query_size = 3;
  if (auto err = h.owner->phase0(h.terms, (kSessions + 1) * 5, *h.server, *h.auditor)) {
    return {false, "setup: " + *err};
  }
  h.ledger->advance_blocks(1);
  h.upload();
  h.owner->send_creds("auditor");
  h.auditor->load_credentials();
  XofSampler rng(trial_seed(4, 0), "acceptance");

  int identical = 0;
  std::set<Hash32> seeds;
  for (int i = 0; i < kSessions; ++i) {
    h.server->submit(ledger::TxKind::kPostDeposit, testing::u64_payload(10));
    h.auditor->submit(ledger::TxKind::kPostDeposit, testing::u64_payload(10));
    h.ledger->advance_blocks(1 + rng.uniform(3));
    h.open();
    const Hash32 hb = *h.ledger->channel_seed();
    seeds.insert(hb);
    auto s = h.session();
    testing::Harness::exchange(s, h.terms.audit_count);
    bool local = s.a.sent_queries().size() == h.terms.audit_count;
    for (uint64_t j = 0; j < s.a.sent_queries().size(); ++j) {
      por::Query expect = por::gen_query(hb, s.a.params().n, h.terms.query_size, j);
      const por::Query& got = s.a.sent_queries()[j];
      local = local && got.entries.size() == expect.entries.size();
      for (size_t e = 0; local && e < got.entries.size(); ++e) {
        local = got.entries[e] == expect.entries[e];
      }
    }
    ledger::Receipt rc = h.auditor->submit(ledger::TxKind::kCloseChannel,
                                           s.a.build_close_payload().encode());
    const bool contract = rc.verdict && rc.verdict->reason == ledger::Reason::kOk;
    identical += local && contract;
  }

  // Control: a single changed coefficient is caught by the same comparison.
  h.server->submit(ledger::TxKind::kPostDeposit, testing::u64_payload(10));
  h.auditor->submit(ledger::TxKind::kPostDeposit, testing::u64_payload(10));
  h.ledger->advance_blocks(1);
  h.open();
  channel::AuditorOptions o;
  o.query_filter = [](por::Query& q) {
    if (q.seq == 1) q.entries.back().coeff += por::Scalar::one();
  };
  channel::ServerOptions any;
  any.accept_any_query = true;
  auto s = h.session(o, any);
  testing::Harness::exchange(s, h.terms.audit_count);
  ledger::Receipt rc =
      h.auditor->submit(ledger::TxKind::kCloseChannel, s.a.build_close_payload().encode());
  const bool control = rc.verdict && rc.verdict->reason == ledger::Reason::kQueryMismatch;

  return {identical == kSessions && control && seeds.size() == kSessions,
          fmt("%d/%d sessions regenerate element-wise from h_b (%zu distinct h_b); altered "
              "coefficient control %s; required %d/%d",
              identical, kSessions, seeds.size(), control ? "rejected" : "NOT rejected", kSessions,
              kSessions)};
}

// --- 5 and 6 ---------------------------------------------------------------

const std::vector<actors::ScenarioReport>& scenario_matrix() {
  static const std::vector<actors::ScenarioReport> reports = [] {
    std::vector<actors::ScenarioReport> out;
    XofSampler rng(trial_seed(5, 0), "acceptance");
    const Bytes data = rng.bytes(32 * 1024);
    for (const actors::ScenarioSpec& spec : actors::scenario_registry()) {
      for (Scheme scheme : spec.schemes) {
        actors::ScenarioConfig c;
        c.name = spec.name;
        c.scheme = scheme;
        c.data = data;
        c.seed = trial_seed(5, out.size());
        c.sectors = 10;
        c.audit_count = 10;
        c.query_size = 5;
        out.push_back(actors::run_scenario(c));
      }
    }
    return out;
  }();
  return reports;
}

Outcome verdict_matrix() {
  const auto& reports = scenario_matrix();
  int green = 0;
  std::set<std::string> cases;
  std::string failed;
  for (const auto& r : reports) {
    cases.insert(r.name.substr(0, r.name.find('-')));
    if (r.passed) {
      ++green;
    } else {
      failed += " " + r.name + "/" + std::string(por::scheme_name(r.scheme));
    }
  }
  const bool all = green == static_cast<int>(reports.size());
  return {all && cases.size() == 7,  // honest plus six cases
          fmt("%d/%zu scenario runs match their expected verdict and balances over %zu cases "
              "(honest + case1..case6, both schemes where applicable); required all",
              green, reports.size(), cases.size()) +
              (failed.empty() ? "" : "; failing:" + failed)};
}

Outcome conservation() {
  const auto& reports = scenario_matrix();
  int exact = 0;
  for (const auto& r : reports) {
    uint64_t sum = 0;
    for (const auto& [id, v] : r.balances) sum += v;
    exact += r.total_before == r.total_after && sum == r.total_before;
  }
  return {exact == static_cast<int>(reports.size()),
          fmt("%d/%zu runs keep total currency exactly equal (tolerance 0)", exact,
              reports.size())};
}

// --- 7 ---------------------------------------------------------------------

Outcome extractability() {
  int recovered = 0, tried = 0, masked_hidden = 0;
  for (uint64_t n : {1, 2, 4, 8, 16}) {
    ++tried;
    XofSampler rng(trial_seed(7, n), "acceptance");
    Fixture f = fixture(Scheme::kAuB, 1, n, rng);
    const Hash32 seed = rng.bytes32();
    std::vector<std::vector<mpz_class>> a;
    std::vector<mpz_class> b;
    for (uint64_t j = 0; j < n; ++j) {
      por::Query q = por::gen_query(seed, n, n, j);
      por::PorResponse r = por::gen_response_aub(q, f.file);
      std::vector<mpz_class> row(n, 0);
      for (const auto& e : q.entries) row[e.index - 1] = testing::to_mpz(e.coeff);
      a.push_back(row);
      b.push_back(testing::to_mpz(r.mu[0]));
    }
    auto m = testing::solve_mod_p(a, b);
    bool exact = m.has_value();
    for (uint64_t i = 0; exact && i < n; ++i) {
      exact = (*m)[i] == testing::to_mpz(f.file.blocks[i][0]);
    }
    recovered += exact;

    // The same attack on masked first responses from n PPAuB sessions.
    Fixture g = fixture(Scheme::kPPAuB, 1, n, rng);
    XofSampler mask = rng.fork("mask");
    a.clear();
    b.clear();
    for (uint64_t j = 0; j < n; ++j) {
      por::Query q = por::gen_query(rng.bytes32(), n, n, 0);
      por::PpaubProof p = por::gen_response_ppaub(q, g.file, g.keys.pk, true, std::nullopt, mask);
      const por::Scalar gamma = crypto::hash_gt_to_scalar(*p.response.R);
      std::vector<mpz_class> row(n, 0);
      for (const auto& e : q.entries) row[e.index - 1] = testing::to_mpz(gamma * e.coeff);
      a.push_back(row);
      b.push_back(testing::to_mpz(p.response.mu[0]));
    }
    auto guess = testing::solve_mod_p(a, b);
    bool leaked = guess.has_value();
    for (uint64_t i = 0; leaked && i < n; ++i) {
      leaked = (*guess)[i] == testing::to_mpz(g.file.blocks[i][0]);
    }
    masked_hidden += !leaked;
  }
  return {recovered == tried && masked_hidden == tried,
          fmt("AuB s=1: %d/%d files (n in {1,2,4,8,16}) recovered exactly from n responses by "
              "solving over Z_p; PPAuB masked responses: %d/%d not recoverable; required all",
              recovered, tried, masked_hidden, tried)};
}

// --- 8 ---------------------------------------------------------------------

Outcome ppaub_masking() {
  constexpr int kResponses = 100;
  XofSampler rng(trial_seed(8, 0), "acceptance");
  Fixture pp = fixture(Scheme::kPPAuB, 1, 16, rng);
  por::Query q = por::gen_query(rng.bytes32(), 16, 8, 0);
  std::set<std::array<uint8_t, 32>> mus;
  int verified = 0;
  for (int i = 0; i < kResponses; ++i) {
    XofSampler fresh(trial_seed(8, 1, i), "mask");
    por::PorResponse r = respond(pp, q, fresh);
    mus.insert(r.mu[0].to_bytes());
    verified += check(pp, q, r) == VerifyStatus::kValid;
  }
  Fixture au = fixture(Scheme::kAuB, 1, 16, rng);
  std::set<std::array<uint8_t, 32>> aub_mus;
  for (int i = 0; i < kResponses; ++i) aub_mus.insert(por::gen_response_aub(q, au.file).mu[0].to_bytes());
  return {mus.size() == kResponses && verified == kResponses && aub_mus.size() == 1,
          fmt("PPAuB: %zu distinct mu over %d fresh-r responses, %d/%d verify; AuB: %zu distinct "
              "mu over %d responses; required exactly %d, %d and 1",
              mus.size(), kResponses, verified, kResponses, aub_mus.size(), kResponses, kResponses,
              kResponses)};
}

// --- 9 ---------------------------------------------------------------------

struct Rig {
  Fixture f;
  channel::ChannelParams params;
  crypto::SigKeypair auditor, server;
};

uint64_t close_bytes(Scheme scheme, uint64_t k) {
  XofSampler rng(trial_seed(9, static_cast<uint64_t>(scheme)), "acceptance");
  Fixture f = fixture(scheme, scheme == Scheme::kAuB ? 10 : 1, 64, rng);
  channel::ChannelParams p;
  p.scheme = scheme;
  p.channel_id = rng.bytes32();
  p.seed = rng.bytes32();
  p.n = 64;
  p.l = 5;
  p.audit_count = k;
  p.max_queries = 10;
  p.fileid = f.params.fileid;
  auto a_key = crypto::SigKeypair::generate(rng);
  auto s_key = crypto::SigKeypair::generate(rng);
  auto pk = std::make_shared<const por::PublicKey>(f.keys.pk);
  channel::AuditorChannel a(p, a_key, s_key.verify_key, pk);
  channel::ServerChannel s(p, s_key, a_key.verify_key,
                           std::make_shared<const por::TaggedFile>(f.file), pk, rng.fork("s"));
  for (uint64_t i = 0; i < k; ++i) a.accept(*s.handle(a.next_query()).response);
  return a.build_close_payload().encode().size();
}

Outcome payload_shape() {
  const std::vector<uint64_t> ks = {1, 3, 5, 7, 10};
  constexpr double kLatencyBudgetMs = 1000;
  std::string detail;
  bool pass = true;
  for (Scheme scheme : {Scheme::kAuB, Scheme::kPPAuB}) {
    std::vector<int64_t> size;
    for (uint64_t k : ks) size.push_back(static_cast<int64_t>(close_bytes(scheme, k)));
    const int64_t delta = (size[1] - size[0]) / 2;
    const int64_t c = size[0] - delta;
    int64_t worst = 0;
    for (size_t i = 0; i < ks.size(); ++i) {
      worst = std::max<int64_t>(worst, std::llabs(size[i] - (c + static_cast<int64_t>(ks[i]) * delta)));
    }
    pass = pass && worst == 0;
    detail += fmt("%s C=%lld delta=%lld residual %lld B; ", por::scheme_name(scheme).data(),
                  static_cast<long long>(c), static_cast<long long>(delta),
                  static_cast<long long>(worst));
  }

  XofSampler rng(trial_seed(9, 99), "acceptance");
  const auto suite = PairingSuite::bls12_381();
  por::OwnerKeys keys = por::keygen_aub(suite, 1000, rng);
  por::TaggedFile file = por::tag_file(rng.bytes(1 << 20), por::PorParams::aub(1000), keys);
  const uint64_t n = file.layout.n;
  constexpr int kAudits = 10;
  double total_ms = 0, worst_ms = 0;
  for (int i = 0; i < kAudits; ++i) {
    por::Query q = por::gen_query(rng.bytes32(), n, n, 0);
    const auto t0 = std::chrono::steady_clock::now();
    por::PorResponse r = por::gen_response_aub(q, file);
    const bool ok = por::verify_aub(q.entries, r.sigma, r.mu, keys.pk) == VerifyStatus::kValid;
    const double ms = secs_since(t0) * 1000;
    pass = pass && ok;
    total_ms += ms;
    worst_ms = std::max(worst_ms, ms);
  }
  pass = pass && worst_ms < kLatencyBudgetMs;
  return {pass, detail + fmt("required residual 0; 1 MiB, s=1000, %llu blocks, l=n: prove+verify "
                             "mean %.1f ms, worst %.1f ms (budget < %.0f ms)",
                             static_cast<unsigned long long>(n), total_ms / kAudits, worst_ms,
                             kLatencyBudgetMs)};
}

// --- 10 --------------------------------------------------------------------

Outcome round_trip() {
  struct Case {
    Scheme scheme;
    uint64_t size;
  };
  const std::vector<Case> cases = {
      {Scheme::kAuB, 1024},          {Scheme::kAuB, 1025},     {Scheme::kAuB, 100 * 1024 + 7},
      {Scheme::kAuB, 1 << 20},       {Scheme::kAuB, 10 << 20}, {Scheme::kPPAuB, 1024},
      {Scheme::kPPAuB, 100 * 1024 + 3}};
  int ok = 0;
  std::string sizes;
  for (size_t i = 0; i < cases.size(); ++i) {
    testing::Harness h(cases[i].scheme, 100 + i, 1);
    h.sectors = 1000;
    XofSampler rng(trial_seed(10, i), "acceptance");
    h.data = rng.bytes(cases[i].size);
    h.register_all();
    h.upload();
    h.server->restart();
    actors::FetchResult f = h.owner->fetch(*h.server);
    ok += f.ok() && f.data == h.data;
    sizes += fmt("%s:%llu ", por::scheme_name(cases[i].scheme).data(),
                 static_cast<unsigned long long>(cases[i].size));
  }
  return {ok == static_cast<int>(cases.size()),
          fmt("%d/%zu uploads fetched byte-identical after a server restart (", ok, cases.size()) +
              sizes + "bytes); required all"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace porchain

int main(int argc, char** argv) {
  using namespace porchain;
  const std::vector<Criterion> all = {
      {1, "scheme correctness", scheme_correctness},
      {2, "tamper detection", tamper_detection},
      {3, "aggregation oracle", aggregation_oracle},
      {4, "query regeneration", query_regeneration},
      {5, "verdict matrix", verdict_matrix},
      {6, "currency conservation", conservation},
      {7, "extractability", extractability},
      {8, "masking", ppaub_masking},
      {9, "payload shape and latency", payload_shape},
      {10, "round trip", round_trip},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  int failures = 0;
  for (const Criterion& c : all) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %-26s %s  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
