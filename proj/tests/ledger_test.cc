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

#include <thread>

#include "harness.hpp"
#include "porchain/crypto/domain.hpp"
#include "porchain/crypto/hash.hpp"
#include "porchain/ledger/ledger.hpp"

namespace porchain::ledger {
namespace {

using testing::Harness;
using testing::u64_payload;
using Decision = channel::AuditorChannel::Decision;

Bytes owner_reg(const ContractTerms& t, uint64_t deposit) {
  ByteWriter w;
  t.write(w);
  w.u64(deposit);
  return std::move(w).take();
}

Bytes party_reg(const std::string& id, ByteView vk) {
  ByteWriter w;
  w.field(id);
  w.field(vk);
  return std::move(w).take();
}

Bytes digest_payload(const std::vector<Hash32>& h, ByteView ssig, ByteView osig) {
  ByteWriter w;
  w.u32(static_cast<uint32_t>(h.size()));
  for (const Hash32& x : h) w.field(x);
  w.field(ssig);
  w.field(osig);
  return std::move(w).take();
}

uint64_t escrow(const Ledger& l) {
  return l.balance_of(std::string(bucket::kOwnerEscrow)) +
         l.balance_of(std::string(bucket::kFrozen)) +
         l.balance_of(std::string(bucket::kServerDeposit)) +
         l.balance_of(std::string(bucket::kAuditorDeposit));
}

TEST(Chain, HeadersLinkAndCommitToTransactions) {
  Harness h;
  h.register_all();
  h.ledger->advance_blocks(2);
  auto chain = h.ledger->chain();
  ASSERT_EQ(chain.size(), h.ledger->height() + 1);
  for (size_t i = 0; i < chain.size(); ++i) {
    EXPECT_EQ(chain[i].height, i);
    EXPECT_EQ(chain[i].tx_root, compute_tx_root(chain[i].tx_hashes));
    EXPECT_EQ(chain[i].header_hash,
              compute_header_hash(chain[i].height, chain[i].parent_hash, chain[i].tx_root));
    if (i > 0) {
      EXPECT_EQ(chain[i].parent_hash, chain[i - 1].header_hash);
    }
  }
  // The three registrations went into block 1.
  EXPECT_EQ(chain[1].tx_hashes.size(), 3u);
  EXPECT_TRUE(chain[2].tx_hashes.empty());
  EXPECT_EQ(h.ledger->last_block_hash(), chain.back().header_hash);
}

TEST(Transactions, AuthenticationAndOrdering) {
  Harness h;
  Bytes reg = owner_reg(h.terms, 500);
  // Signed by the wrong key.
  EXPECT_THROW(h.ledger->submit(h.tx("owner", h.mk, TxKind::kRegisterOwner, reg)), TxRejected);
  // Wrong sequence number.
  EXPECT_THROW(h.ledger->submit(make_tx(TxKind::kRegisterOwner, "owner", 5, reg, h.ok)), TxRejected);
  // Unknown sender.
  EXPECT_THROW(h.ledger->submit(make_tx(TxKind::kRegisterOwner, "ghost", 0, reg, h.mk)), TxRejected);
  // Unknown kind.
  EXPECT_THROW(h.ledger->submit(h.tx("owner", h.ok, static_cast<TxKind>(0xEE), {})), TxRejected);
  // Payload tampered after signing.
  Transaction t = h.tx("owner", h.ok, TxKind::kRegisterOwner, reg);
  t.payload.back() ^= 1;
  EXPECT_THROW(h.ledger->submit(t), TxRejected);
  // Rejections consume neither sequence numbers nor funds.
  EXPECT_EQ(h.ledger->next_seq("owner"), 0u);
  EXPECT_EQ(h.ledger->balance_of("owner"), 10'000u);
  EXPECT_NO_THROW(h.ledger->submit(h.tx("owner", h.ok, TxKind::kRegisterOwner, reg)));
  EXPECT_EQ(h.ledger->next_seq("owner"), 1u);
}

TEST(Transactions, CodecRoundTrip) {
  Harness h;
  Transaction t = h.tx("owner", h.ok, TxKind::kPostDeposit, u64_payload(7));
  Transaction d = Transaction::decode(t.encode());
  EXPECT_EQ(d.kind, t.kind);
  EXPECT_EQ(d.sender, t.sender);
  EXPECT_EQ(d.seq, t.seq);
  EXPECT_EQ(d.payload, t.payload);
  EXPECT_EQ(d.sig, t.sig);
  EXPECT_EQ(d.hash(), t.hash());
  Bytes enc = t.encode();
  enc.push_back(0);
  EXPECT_THROW(Transaction::decode(enc), FormatError);
}

TEST(Registration, DepositBoundary) {
  Harness h;
  const uint64_t need = h.terms.c_s + h.terms.c_a;
  EXPECT_THROW(h.owner->submit(TxKind::kRegisterOwner, owner_reg(h.terms, need - 1)), TxRejected);
  EXPECT_EQ(h.ledger->balance_of("owner"), 10'000u);
  // A corrected deposit succeeds after the abort.
  h.owner->submit(TxKind::kRegisterOwner, owner_reg(h.terms, need));
  EXPECT_EQ(h.ledger->balance_of("owner"), 10'000u - need);
  EXPECT_EQ(h.ledger->balance_of(std::string(bucket::kOwnerEscrow)), need);
  EXPECT_THROW(h.owner->submit(TxKind::kRegisterOwner, owner_reg(h.terms, need)), TxRejected);
}

TEST(Registration, DepositAboveBalanceRejected) {
  Harness h;
  EXPECT_THROW(h.owner->submit(TxKind::kRegisterOwner, owner_reg(h.terms, 10'001)), TxRejected);
}

TEST(Registration, InvalidTermsRejected) {
  Harness h;
  ContractTerms t = h.terms;
  t.audit_count = 0;
  EXPECT_THROW(h.owner->submit(TxKind::kRegisterOwner, owner_reg(t, 500)), TxRejected);
}

TEST(Registration, PartiesAreOwnerControlledAndKeyBound) {
  Harness h;
  h.owner->submit(TxKind::kRegisterOwner, owner_reg(h.terms, 500));
  // Only the owner registers counterparties.
  EXPECT_THROW(h.ledger->submit(h.tx("mallory", h.mk, TxKind::kRegisterServer,
                                     party_reg("server", h.sk.verify_key))),
               TxRejected);
  // The registered key must be the account's own.
  EXPECT_THROW(h.owner->submit(TxKind::kRegisterServer, party_reg("server", h.mk.verify_key)),
               TxRejected);
  EXPECT_THROW(h.owner->submit(TxKind::kRegisterServer, party_reg("nobody", h.mk.verify_key)),
               TxRejected);
  h.owner->submit(TxKind::kRegisterServer, party_reg("server", h.sk.verify_key));
  EXPECT_THROW(h.owner->submit(TxKind::kRegisterServer, party_reg("server", h.sk.verify_key)),
               TxRejected);
  EXPECT_EQ(h.ledger->contract().server_id, "server");
}

TEST(Registration, OwnerMayAuditItself) {
  Harness h;
  h.owner->submit(TxKind::kRegisterOwner, owner_reg(h.terms, 500));
  h.owner->submit(TxKind::kRegisterServer, party_reg("server", h.sk.verify_key));
  EXPECT_NO_THROW(h.owner->submit(TxKind::kRegisterAuditor, party_reg("owner", h.ok.verify_key)));
  EXPECT_EQ(h.ledger->contract().auditor_id, "owner");
}

TEST(Digest, BothSignaturesChecked) {
  Harness h;
  h.register_all();
  std::vector<Hash32> d = {crypto::sha256(as_bytes("a")), crypto::sha256(as_bytes("b"))};
  Bytes ssig = crypto::sign(server_digest_message(d), h.sk);
  Bytes osig = crypto::sign(owner_countersign_message(d, ssig), h.ok);
  Bytes forged = crypto::sign(server_digest_message(d), h.mk);
  Bytes bad_osig = crypto::sign(owner_countersign_message(d, ssig), h.mk);

  EXPECT_THROW(h.owner->submit(TxKind::kReceiveSignedDigest, digest_payload(d, forged, osig)),
               TxRejected);
  EXPECT_THROW(h.owner->submit(TxKind::kReceiveSignedDigest, digest_payload(d, ssig, bad_osig)),
               TxRejected);
  EXPECT_THROW(h.owner->submit(TxKind::kReceiveSignedDigest, digest_payload({}, ssig, osig)),
               TxRejected);
  // Only the owner anchors.
  EXPECT_THROW(h.server->submit(TxKind::kReceiveSignedDigest, digest_payload(d, ssig, osig)),
               TxRejected);
  h.owner->submit(TxKind::kReceiveSignedDigest, digest_payload(d, ssig, osig));
  ASSERT_TRUE(h.ledger->contract().digest);
  EXPECT_EQ(h.ledger->contract().digest->h, d);
  EXPECT_THROW(h.owner->submit(TxKind::kReceiveSignedDigest, digest_payload(d, ssig, osig)),
               TxRejected);
}

TEST(Terminate, RefundsOnlyBeforeAnchoring) {
  Harness h;
  h.register_all();
  EXPECT_THROW(h.server->submit(TxKind::kTerminate, {}), TxRejected);
  Receipt r = h.owner->submit(TxKind::kTerminate, {});
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->outcome, Outcome::kTerminated);
  EXPECT_EQ(h.ledger->balance_of("owner"), 10'000u);
  EXPECT_EQ(escrow(*h.ledger), 0u);
  EXPECT_THROW(h.server->submit(TxKind::kPostDeposit, u64_payload(10)), TxRejected);

  Harness g;
  g.register_all();
  g.upload();
  EXPECT_THROW(g.owner->submit(TxKind::kTerminate, {}), TxRejected);
  EXPECT_EQ(escrow(*g.ledger), g.terms.c_s + g.terms.c_a);
}

TEST(Credentials, AddressedToRegisteredAuditorOnly) {
  Harness h;
  h.register_all();
  EXPECT_THROW(h.owner->send_creds("auditor"), ProtocolError);  // no keys before upload
  h.upload();
  EXPECT_TRUE(h.owner->send_creds("mallory").has_value());
  EXPECT_FALSE(h.owner->send_creds("auditor").has_value());
  EXPECT_TRUE(h.owner->send_creds("auditor").has_value());  // already published
  h.auditor->load_credentials();
  EXPECT_EQ(h.auditor->pk()->encode(), h.owner->keys().pk.encode());
  EXPECT_EQ(h.ledger->contract().fileid, h.owner->fileid());
}

TEST(Credentials, PpaubNeedsFileid) {
  Harness h;
  h.register_all();
  h.upload();
  ByteWriter w;
  w.field(std::string("auditor"));
  w.field(h.owner->keys().pk.encode());
  w.field(ByteView{});
  EXPECT_THROW(h.owner->submit(TxKind::kPublishCredentials, std::move(w).take()), TxRejected);
}

TEST(Deposits, OnlyServerOrAuditor) {
  Harness h;
  h.register_all();
  EXPECT_THROW(h.ledger->submit(h.tx("mallory", h.mk, TxKind::kPostDeposit, u64_payload(5))),
               TxRejected);
  EXPECT_THROW(h.owner->submit(TxKind::kPostDeposit, u64_payload(5)), TxRejected);
  EXPECT_THROW(h.server->submit(TxKind::kPostDeposit, u64_payload(0)), TxRejected);
  h.server->submit(TxKind::kPostDeposit, u64_payload(5));
  EXPECT_EQ(h.ledger->balance_of(std::string(bucket::kServerDeposit)), 5u);
}

TEST(Channel, OpenRequiresEveryPrecondition) {
  Harness h;
  h.register_all();
  EXPECT_THROW(h.open(), TxRejected);  // no digest
  h.upload();
  EXPECT_THROW(h.open(), TxRejected);  // no credentials
  h.owner->send_creds("auditor");
  EXPECT_THROW(h.open(), TxRejected);  // no deposits
  h.server->submit(TxKind::kPostDeposit, u64_payload(h.terms.deposit_s));
  EXPECT_THROW(h.open(), TxRejected);  // auditor deposit missing
  h.auditor->submit(TxKind::kPostDeposit, u64_payload(h.terms.deposit_a - 1));
  EXPECT_THROW(h.open(), TxRejected);  // below terms
  h.auditor->submit(TxKind::kPostDeposit, u64_payload(1));
  EXPECT_THROW(h.server->submit(TxKind::kOpenChannel, {}), TxRejected);  // not the auditor
  EXPECT_NO_THROW(h.open());
  EXPECT_THROW(h.open(), TxRejected);  // already open
  EXPECT_EQ(h.ledger->balance_of(std::string(bucket::kFrozen)), h.terms.c_s + h.terms.c_a);
}

TEST(Channel, SeedIsCachedHeaderHash) {
  Harness h;
  h.ready();
  EXPECT_FALSE(h.ledger->channel_seed());
  const Hash32 head = h.ledger->last_block_hash();
  h.open();
  ASSERT_TRUE(h.ledger->channel_seed());
  EXPECT_EQ(*h.ledger->channel_seed(), head);
  h.ledger->advance_blocks(4);
  EXPECT_NE(h.ledger->last_block_hash(), head);
  EXPECT_EQ(*h.ledger->channel_seed(), head);  // cached, not re-read
  Bytes id = u64_be(1);
  id.insert(id.end(), head.begin(), head.end());
  EXPECT_EQ(h.ledger->contract().channel.channel_id, crypto::tagged_hash(domain::kChannelId, id));
}

TEST(Channel, DepositsLockedWhileOpen) {
  Harness h;
  h.ready();
  h.open();
  EXPECT_THROW(h.server->submit(TxKind::kPostDeposit, u64_payload(1)), TxRejected);
  EXPECT_THROW(h.auditor->submit(TxKind::kPostDeposit, u64_payload(1)), TxRejected);
}

TEST(Channel, ReopenRecomputesSeed) {
  Harness h;
  h.terms.deposit_s = 100;
  h.terms.deposit_a = 100;
  h.owner->submit(TxKind::kRegisterOwner, owner_reg(h.terms, 2 * (h.terms.c_s + h.terms.c_a)));
  h.owner->submit(TxKind::kRegisterServer, party_reg("server", h.sk.verify_key));
  h.owner->submit(TxKind::kRegisterAuditor, party_reg("auditor", h.ak.verify_key));
  h.ledger->advance_blocks(1);
  h.upload();
  h.creds_and_deposits();

  h.open();
  const Hash32 first_seed = *h.ledger->channel_seed();
  const Hash32 first_id = h.ledger->contract().channel.channel_id;
  auto s = h.session();
  Harness::exchange(s, h.terms.audit_count);
  ASSERT_EQ(s.a.decision(), Decision::kCloseOk);
  Receipt r = h.auditor->submit(TxKind::kCloseChannel, s.a.build_close_payload().encode());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->outcome, Outcome::kPaidBoth);
  EXPECT_FALSE(h.ledger->channel_seed());

  h.server->submit(TxKind::kPostDeposit, u64_payload(h.terms.deposit_s));
  h.auditor->submit(TxKind::kPostDeposit, u64_payload(h.terms.deposit_a));
  h.ledger->advance_blocks(1);
  const Hash32 head = h.ledger->last_block_hash();
  h.open();
  EXPECT_EQ(*h.ledger->channel_seed(), head);
  EXPECT_NE(head, first_seed);
  EXPECT_NE(h.ledger->contract().channel.channel_id, first_id);
  EXPECT_EQ(h.ledger->contract().channel.counter, 2u);

  // Queries from the first channel do not carry over.
  auto t = h.session();
  Harness::exchange(t, h.terms.audit_count);
  ClosePayload replayed = s.a.build_close_payload();
  Receipt stale = h.auditor->submit(TxKind::kCloseChannel, replayed.encode());
  ASSERT_TRUE(stale.verdict);
  EXPECT_EQ(stale.verdict->outcome, Outcome::kPenalizeAuditor);
  EXPECT_EQ(stale.verdict->reason, Reason::kBadQuerySignature);
}

class CloseTest : public ::testing::TestWithParam<por::Scheme> {};

TEST_P(CloseTest, HonestCloseSettlesExactly) {
  Harness h(GetParam());
  h.ready();
  const uint64_t total = h.ledger->total_currency();
  h.open();
  auto s = h.session();
  Harness::exchange(s, h.terms.audit_count);
  ASSERT_EQ(s.a.decision(), Decision::kCloseOk);
  Receipt r = h.auditor->submit(TxKind::kCloseChannel, s.a.build_close_payload().encode());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->outcome, Outcome::kPaidBoth);
  EXPECT_EQ(r.verdict->reason, Reason::kOk);
  EXPECT_EQ(h.ledger->balance_of("server"), 5'000u + h.terms.c_s);
  EXPECT_EQ(h.ledger->balance_of("auditor"), 5'000u + h.terms.c_a);
  EXPECT_EQ(h.ledger->balance_of("owner"), 10'000u - h.terms.c_s - h.terms.c_a);
  EXPECT_EQ(escrow(*h.ledger), 0u);
  EXPECT_EQ(h.ledger->total_currency(), total);
  EXPECT_EQ(h.ledger->contract().channel.status, ChannelStatus::kClosed);
  EXPECT_THROW(h.auditor->submit(TxKind::kCloseChannel, s.a.build_close_payload().encode()),
               TxRejected);
}

TEST_P(CloseTest, UnderAuditedPenalizesAuditorButPaysServer) {
  Harness h(GetParam());
  h.ready();
  h.open();
  auto s = h.session();
  Harness::exchange(s, h.terms.audit_count - 1);
  auto p = channel::build_close_payload(GetParam(), false, s.a.sent_queries(), s.a.accumulator(),
                                        h.ledger->contract().fileid);
  Receipt r = h.auditor->submit(TxKind::kCloseChannel, p.encode());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->outcome, Outcome::kPenalizeAuditor);
  EXPECT_EQ(r.verdict->reason, Reason::kUnderAudited);
  EXPECT_EQ(h.ledger->balance_of("server"), 5'000u + h.terms.c_s);
  EXPECT_EQ(h.ledger->balance_of("auditor"), 5'000u - h.terms.deposit_a);
}

TEST_P(CloseTest, EmptyAndForeignClosesRejected) {
  Harness h(GetParam());
  h.ready();
  h.open();
  ClosePayload empty;
  empty.scheme = GetParam();
  EXPECT_THROW(h.auditor->submit(TxKind::kCloseChannel, empty.encode()), TxRejected);
  EXPECT_THROW(h.server->submit(TxKind::kCloseChannel, empty.encode()), TxRejected);
  EXPECT_THROW(h.ledger->submit(h.tx("mallory", h.mk, TxKind::kCloseChannel, empty.encode())),
               TxRejected);
  EXPECT_THROW(h.auditor->submit(TxKind::kCloseChannel, Bytes{1, 2, 3}), TxRejected);
  EXPECT_EQ(h.ledger->contract().channel.status, ChannelStatus::kOpen);
}

TEST_P(CloseTest, ForgedQuerySignature) {
  Harness h(GetParam());
  h.ready();
  h.open();
  auto s = h.session();
  Harness::exchange(s, h.terms.audit_count);
  ClosePayload p = s.a.build_close_payload();
  p.queries[1].sig[0] ^= 1;
  Receipt r = h.auditor->submit(TxKind::kCloseChannel, p.encode());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->reason, Reason::kBadQuerySignature);
  EXPECT_EQ(h.ledger->balance_of("server"), 5'000u);  // no pay on a no-complaint close
}

TEST_P(CloseTest, TamperedAggregateFails) {
  Harness h(GetParam());
  h.ready();
  h.open();
  auto s = h.session();
  Harness::exchange(s, h.terms.audit_count);
  por::Accumulator acc = s.a.accumulator();
  acc.mu_all[0] += por::Scalar::one();
  auto p = channel::build_close_payload(GetParam(), false, s.a.sent_queries(), acc,
                                        h.ledger->contract().fileid);
  Receipt r = h.auditor->submit(TxKind::kCloseChannel, p.encode());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->reason, Reason::kAggregateFailed);
}

TEST_P(CloseTest, DisputeTimeoutPenalizesServer) {
  Harness h(GetParam());
  h.ready();
  h.open();
  auto s = h.session();
  Harness::exchange(s, 2);
  auto p = channel::build_close_payload(GetParam(), true, s.a.sent_queries(), std::nullopt,
                                        h.ledger->contract().fileid);
  Receipt r = h.auditor->submit(TxKind::kCloseChannel, p.encode());
  EXPECT_FALSE(r.verdict);
  const ContractState c = h.ledger->contract();
  ASSERT_EQ(c.channel.status, ChannelStatus::kDisputed);
  ASSERT_TRUE(c.channel.dispute);
  EXPECT_TRUE(c.channel.dispute->last_query.same_challenge(s.a.sent_queries().back()));
  EXPECT_EQ(c.channel.dispute->deadline, h.ledger->height() + h.terms.dispute_window);

  h.ledger->advance_blocks(h.terms.dispute_window - 1);
  EXPECT_EQ(h.ledger->contract().channel.status, ChannelStatus::kDisputed);
  h.ledger->advance_blocks(1);
  ASSERT_EQ(h.ledger->verdicts().size(), 1u);
  EXPECT_EQ(h.ledger->verdicts()[0].reason, Reason::kDisputeTimeout);
  EXPECT_EQ(h.ledger->verdicts()[0].outcome, Outcome::kPenalizeServer);
  ByteWriter w;
  w.field(s.s.rebuttal(s.a.sent_queries().back()));
  EXPECT_THROW(h.server->submit(TxKind::kSubmitRebuttal, std::move(w).take()), TxRejected);
}

TEST_P(CloseTest, RebuttalBeforeDeadline) {
  Harness h(GetParam());
  h.ready();
  h.open();
  auto s = h.session();
  Harness::exchange(s, 2);
  auto p = channel::build_close_payload(GetParam(), true, s.a.sent_queries(), std::nullopt,
                                        h.ledger->contract().fileid);
  h.auditor->submit(TxKind::kCloseChannel, p.encode());
  h.ledger->advance_blocks(h.terms.dispute_window - 1);
  ByteWriter w;
  w.field(s.s.rebuttal(s.a.sent_queries().back()));
  Bytes body = std::move(w).take();
  EXPECT_THROW(h.auditor->submit(TxKind::kSubmitRebuttal, body), TxRejected);
  Receipt r = h.server->submit(TxKind::kSubmitRebuttal, body);
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->reason, Reason::kRebuttalValid);
  EXPECT_EQ(h.ledger->balance_of("server"), 5'000u + h.terms.c_s);
  EXPECT_EQ(h.ledger->balance_of("auditor"), 5'000u - h.terms.deposit_a);
}

TEST_P(CloseTest, MalformedRebuttalPenalizesServer) {
  Harness h(GetParam());
  h.ready();
  h.open();
  auto s = h.session();
  Harness::exchange(s, 1);
  auto p = channel::build_close_payload(GetParam(), true, s.a.sent_queries(), std::nullopt,
                                        h.ledger->contract().fileid);
  h.auditor->submit(TxKind::kCloseChannel, p.encode());
  ByteWriter w;
  w.field(Bytes{9, 9, 9});
  Receipt r = h.server->submit(TxKind::kSubmitRebuttal, std::move(w).take());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->reason, Reason::kRebuttalMalformed);
}

TEST_P(CloseTest, PartialPenalty) {
  Harness h(GetParam());
  h.terms.penalty = 250;
  h.ready();
  h.open();
  auto s = h.session();
  Harness::exchange(s, 2);
  Receipt r = h.server->submit(TxKind::kCloseChannel, s.s.complaint_payload().encode());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->reason, Reason::kFalseComplaint);
  EXPECT_EQ(h.ledger->balance_of("server"), 5'000u - 250u);
  EXPECT_EQ(h.ledger->balance_of("auditor"), 5'000u + h.terms.c_a);
  EXPECT_EQ(h.ledger->balance_of("owner"), 10'000u - h.terms.c_a + 250u);
  EXPECT_EQ(escrow(*h.ledger), 0u);
}

INSTANTIATE_TEST_SUITE_P(Schemes, CloseTest,
                         ::testing::Values(por::Scheme::kAuB, por::Scheme::kPPAuB),
                         [](const auto& info) { return std::string(por::scheme_name(info.param)); });

TEST(Replay, LogReproducesState) {
  Harness h(por::Scheme::kAuB);
  h.ready();
  EXPECT_THROW(h.owner->submit(TxKind::kTerminate, {}), TxRejected);  // logged, rejected
  h.open();
  auto s = h.session();
  Harness::exchange(s, h.terms.audit_count);
  h.auditor->submit(TxKind::kCloseChannel, s.a.build_close_payload().encode());
  h.ledger->advance_blocks(2);

  auto copy = Ledger::replay(h.ledger->transaction_log());
  EXPECT_EQ(copy->state_digest(), h.ledger->state_digest());
  EXPECT_EQ(copy->height(), h.ledger->height());
  EXPECT_EQ(copy->last_block_hash(), h.ledger->last_block_hash());
  EXPECT_EQ(copy->balances(), h.ledger->balances());
  EXPECT_EQ(copy->verdicts().size(), 1u);
  EXPECT_EQ(copy->transaction_log(), h.ledger->transaction_log());

  Bytes log = h.ledger->transaction_log();
  log[0] ^= 1;
  EXPECT_THROW(Ledger::replay(log), FormatError);
}

TEST(Replay, StateDigestTracksChanges) {
  Harness h;
  const Hash32 d0 = h.ledger->state_digest();
  h.register_all();
  EXPECT_NE(h.ledger->state_digest(), d0);
}

TEST(Concurrency, ReadsDuringWrites) {
  Harness h;
  h.register_all();
  const uint64_t total = h.ledger->total_currency();
  std::atomic<bool> stop{false};
  std::atomic<int> bad{0};
  std::thread reader([&] {
    while (!stop) {
      if (h.ledger->total_currency() != total) ++bad;
    }
  });
  for (int i = 0; i < 200; ++i) {
    h.server->submit(TxKind::kPostDeposit, u64_payload(1));
    if (i % 10 == 0) h.ledger->advance_blocks(1);
  }
  stop = true;
  reader.join();
  EXPECT_EQ(bad.load(), 0);
  EXPECT_EQ(h.ledger->balance_of(std::string(bucket::kServerDeposit)), 200u);
}

TEST(Verdict, JsonLine) {
  Verdict v;
  v.outcome = Outcome::kPenalizeServer;
  v.reason = Reason::kRebuttalFailed;
  v.transfers.push_back({"escrow/frozen", "owner", 5, TransferKind::kRefund});
  const std::string line = v.to_json_line();
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_NE(line.find("\"penalize_server\""), std::string::npos);
  EXPECT_NE(line.find("\"rebuttal_failed\""), std::string::npos);
}

TEST(ContractTerms, CodecAndCap) {
  ContractTerms t;
  t.query_size = 5;
  EXPECT_EQ(t.effective_privacy_cap(), 4u);
  t.privacy_cap = 9;
  EXPECT_EQ(t.effective_privacy_cap(), 9u);
  ByteWriter w;
  t.write(w);
  Bytes b = std::move(w).take();
  ByteReader r(b);
  EXPECT_EQ(ContractTerms::read(r), t);
}

}  // namespace
}  // namespace porchain::ledger
