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

#include "harness.hpp"
#include "oracle.hpp"
#include "porchain/channel/channel.hpp"
#include "porchain/crypto/hash.hpp"

namespace porchain::channel {
namespace {

using Decision = AuditorChannel::Decision;
using testing::seed_from;

struct Rig {
  std::shared_ptr<const por::PublicKey> pk;
  std::shared_ptr<const por::TaggedFile> file;
  crypto::SigKeypair auditor, server, other;
  ChannelParams params;
};

Rig make_rig(Scheme scheme, uint64_t seed, uint64_t n = 12, uint64_t l = 3, uint64_t k = 4) {
  crypto::XofSampler rng(seed_from(seed), "test/channel");
  const auto suite = crypto::PairingSuite::bls12_381();
  Rig s;
  por::PorParams pp = scheme == Scheme::kAuB ? por::PorParams::aub(3) : por::PorParams::ppaub();
  por::OwnerKeys keys = scheme == Scheme::kAuB ? por::keygen_aub(suite, 3, rng)
                                               : por::keygen_ppaub(suite, rng);
  if (scheme == Scheme::kPPAuB) pp.fileid = rng.scalar();
  Bytes data = rng.bytes(n * pp.block_bytes());
  s.file = std::make_shared<const por::TaggedFile>(por::tag_file(data, pp, keys));
  s.pk = std::make_shared<const por::PublicKey>(keys.pk);
  s.auditor = crypto::SigKeypair::generate(rng);
  s.server = crypto::SigKeypair::generate(rng);
  s.other = crypto::SigKeypair::generate(rng);
  s.params.scheme = scheme;
  s.params.channel_id = rng.bytes32();
  s.params.seed = rng.bytes32();
  s.params.nonce_floor = 0;
  s.params.n = n;
  s.params.l = l;
  s.params.audit_count = k;
  s.params.max_queries = k;
  s.params.fileid = pp.fileid;
  return s;
}

AuditorChannel auditor_of(const Rig& s, AuditorOptions o = {}) {
  return AuditorChannel(s.params, s.auditor, s.server.verify_key, s.pk, std::move(o));
}

ServerChannel server_of(const Rig& s, ServerOptions o = {}, uint64_t rng_seed = 9) {
  return ServerChannel(s.params, s.server, s.auditor.verify_key, s.file, s.pk,
                       crypto::XofSampler(seed_from(rng_seed), "test/server"), o);
}

class ChannelTest : public ::testing::TestWithParam<Scheme> {};

TEST_P(ChannelTest, HonestSessionClosesOk) {
  Rig s = make_rig(GetParam(), 1);
  auto a = auditor_of(s);
  auto srv = server_of(s);
  for (uint64_t i = 0; i < s.params.audit_count; ++i) {
    ChannelMsg q = a.next_query();
    EXPECT_EQ(q.nonce, 2 * i);
    auto reply = srv.handle(q);
    ASSERT_TRUE(reply.response) << complaint_reason_name(reply.complaint);
    EXPECT_EQ(reply.response->nonce, 2 * i + 1);
    Decision d = a.accept(*reply.response);
    EXPECT_EQ(d, i + 1 < s.params.audit_count ? Decision::kContinue : Decision::kCloseOk);
  }
  EXPECT_EQ(a.complaint(), ComplaintReason::kNone);
  EXPECT_EQ(por::verify_accumulator(a.accumulator(), *s.pk, s.params.fileid),
            por::VerifyStatus::kValid);
  EXPECT_THROW(a.accept(ChannelMsg{}), ProtocolError);  // nothing pending
}

TEST_P(ChannelTest, QueriesFollowRegeneration) {
  Rig s = make_rig(GetParam(), 2);
  auto a = auditor_of(s);
  auto srv = server_of(s);
  for (int i = 0; i < 3; ++i) {
    auto reply = srv.handle(a.next_query());
    a.accept(*reply.response);
  }
  for (uint64_t j = 0; j < a.sent_queries().size(); ++j) {
    EXPECT_TRUE(a.sent_queries()[j].same_challenge(por::gen_query(s.params.seed, s.params.n, s.params.l, j)));
    EXPECT_TRUE(crypto::sig_verify(a.sent_queries()[j].signing_bytes(s.params.channel_id),
                                   a.sent_queries()[j].sig, s.auditor.verify_key));
  }
}

TEST_P(ChannelTest, AccumulatorMatchesIndependentFold) {
  Rig s = make_rig(GetParam(), 3);
  auto a = auditor_of(s);
  auto srv = server_of(s);
  std::vector<por::PorResponse> resps;
  for (uint64_t i = 0; i < s.params.audit_count; ++i) {
    auto reply = srv.handle(a.next_query());
    ByteReader r(reply.response->payload);
    ASSERT_EQ(r.u64(), i);
    resps.push_back(por::PorResponse::decode_proof(r.field(), GetParam(), s.pk->sectors()));
    a.accept(*reply.response);
  }
  const por::Accumulator& acc = a.accumulator();
  std::vector<por::QueryEntry> all;
  por::G1 sigma;
  std::vector<mpz_class> mu(resps[0].mu.size(), 0);
  for (size_t i = 0; i < resps.size(); ++i) {
    const auto& e = a.sent_queries()[i].entries;
    all.insert(all.end(), e.begin(), e.end());
    sigma += resps[i].sigma;
    for (size_t j = 0; j < mu.size(); ++j) mu[j] += testing::to_mpz(resps[i].mu[j]);
  }
  EXPECT_EQ(acc.q_all, all);
  EXPECT_EQ(acc.sigma_all, sigma);
  ASSERT_EQ(acc.mu_all.size(), mu.size());
  for (size_t j = 0; j < mu.size(); ++j) EXPECT_EQ(testing::to_mpz(acc.mu_all[j]), testing::mod_p(mu[j]));
  EXPECT_EQ(acc.responses, resps.size());
  if (GetParam() == Scheme::kPPAuB) {
    // One masking value per session, so every response carries the same R.
    for (const auto& r : resps) EXPECT_EQ(*r.R, *resps[0].R);
    EXPECT_EQ(*acc.R, *resps[0].R);
  }
}

TEST_P(ChannelTest, ServerRejectsReplayedQuery) {
  Rig s = make_rig(GetParam(), 4);
  auto a = auditor_of(s);
  auto srv = server_of(s);
  ChannelMsg q = a.next_query();
  ASSERT_TRUE(srv.handle(q).response);
  auto again = srv.handle(q);
  EXPECT_FALSE(again.response);
  EXPECT_EQ(again.complaint, ComplaintReason::kNonce);
  EXPECT_EQ(srv.complaint(), ComplaintReason::kNonce);
}

TEST_P(ChannelTest, ServerRejectsCrossChannelReplay) {
  Rig s = make_rig(GetParam(), 5);
  Rig t = s;
  t.params.channel_id = crypto::sha256(as_bytes("another channel"));
  auto a = auditor_of(s);
  auto other_server = server_of(t);
  auto reply = other_server.handle(a.next_query());
  EXPECT_FALSE(reply.response);
  EXPECT_EQ(reply.complaint, ComplaintReason::kWrongChannel);

  // Re-wrapping the query under the new channel id does not help: the query
  // signature binds the original channel.
  auto b = auditor_of(s);
  ChannelMsg q = b.next_query();
  ChannelMsg rewrapped = make_msg(t.params.channel_id, q.nonce, q.kind, q.payload, s.auditor);
  auto srv2 = server_of(t);
  auto r2 = srv2.handle(rewrapped);
  EXPECT_FALSE(r2.response);
  EXPECT_EQ(r2.complaint, ComplaintReason::kSignature);
}

TEST_P(ChannelTest, ServerRejectsForeignSigner) {
  Rig s = make_rig(GetParam(), 6);
  Rig forged = s;
  forged.auditor = s.other;
  auto a = auditor_of(forged);
  auto srv = server_of(s);
  auto reply = srv.handle(a.next_query());
  EXPECT_EQ(reply.complaint, ComplaintReason::kSignature);
}

TEST_P(ChannelTest, ServerRejectsGarbageAndWrongKind) {
  Rig s = make_rig(GetParam(), 7);
  auto srv = server_of(s);
  ChannelMsg junk = make_msg(s.params.channel_id, 0, MsgKind::kQuery, Bytes{1, 2}, s.auditor);
  EXPECT_EQ(srv.handle(junk).complaint, ComplaintReason::kMalformed);
  auto srv2 = server_of(s);
  ChannelMsg ack = make_msg(s.params.channel_id, 0, MsgKind::kAck, {}, s.auditor);
  EXPECT_EQ(srv2.handle(ack).complaint, ComplaintReason::kWrongKind);
}

TEST_P(ChannelTest, ServerDetectsNonRegeneratedQuery) {
  Rig s = make_rig(GetParam(), 8);
  AuditorOptions o;
  o.query_filter = [](por::Query& q) { q.entries[0].coeff += por::Scalar::one(); };
  auto a = auditor_of(s, o);
  auto srv = server_of(s);
  auto reply = srv.handle(a.next_query());
  EXPECT_EQ(reply.complaint, ComplaintReason::kQueryMismatch);
  // The colluding server answers anyway.
  auto b = auditor_of(s, o);
  ServerOptions any;
  any.accept_any_query = true;
  auto colluder = server_of(s, any);
  EXPECT_TRUE(colluder.handle(b.next_query()).response);
}

TEST_P(ChannelTest, AuditorRejectsBadResponses) {
  Rig s = make_rig(GetParam(), 10);
  {
    auto a = auditor_of(s);
    auto srv = server_of(s);
    ChannelMsg r = *srv.handle(a.next_query()).response;
    r.sig[0] ^= 1;
    EXPECT_EQ(a.accept(r), Decision::kCloseComplaint);
    EXPECT_EQ(a.complaint(), ComplaintReason::kSignature);
  }
  {
    auto a = auditor_of(s);
    auto srv = server_of(s);
    ChannelMsg r = *srv.handle(a.next_query()).response;
    ChannelMsg renonced = make_msg(r.channel_id, r.nonce + 2, r.kind, r.payload, s.server);
    EXPECT_EQ(a.accept(renonced), Decision::kCloseComplaint);
    EXPECT_EQ(a.complaint(), ComplaintReason::kNonce);
  }
  {
    auto a = auditor_of(s);
    auto srv = server_of(s);
    ChannelMsg r = *srv.handle(a.next_query()).response;
    ChannelMsg moved = make_msg(crypto::sha256(as_bytes("x")), r.nonce, r.kind, r.payload, s.server);
    EXPECT_EQ(a.accept(moved), Decision::kCloseComplaint);
    EXPECT_EQ(a.complaint(), ComplaintReason::kWrongChannel);
  }
  {
    auto a = auditor_of(s);
    a.next_query();
    ChannelMsg bad = make_msg(s.params.channel_id, 1, MsgKind::kResponse, Bytes{0}, s.server);
    EXPECT_EQ(a.accept(bad), Decision::kCloseComplaint);
    EXPECT_EQ(a.complaint(), ComplaintReason::kMalformed);
  }
}

TEST_P(ChannelTest, MissingBlockFailsVerification) {
  Rig s = make_rig(GetParam(), 11);
  por::Query q0 = por::gen_query(s.params.seed, s.params.n, s.params.l, 0);
  por::TaggedFile broken = *s.file;
  broken.blocks[q0.entries[0].index - 1].assign(broken.layout.s, por::Scalar::zero());
  Rig b = s;
  b.file = std::make_shared<const por::TaggedFile>(broken);
  auto a = auditor_of(s);
  auto srv = server_of(b);
  auto reply = srv.handle(a.next_query());
  ASSERT_TRUE(reply.response);
  EXPECT_EQ(a.accept(*reply.response), Decision::kCloseComplaint);
  EXPECT_EQ(a.complaint(), ComplaintReason::kVerifyFailed);
  // Nor can the server rebut the disputed query.
  EXPECT_NE(por::verify_encoded(q0.entries, srv.rebuttal(a.sent_queries().back()), *s.pk,
                                s.params.fileid),
            por::VerifyStatus::kValid);

  AuditorOptions ignore;
  ignore.ignore_failures = true;
  auto lax = auditor_of(s, ignore);
  auto srv2 = server_of(b);
  EXPECT_EQ(lax.accept(*srv2.handle(lax.next_query()).response), Decision::kContinue);
  EXPECT_EQ(lax.checks().back(), por::VerifyStatus::kInvalid);
}

TEST_P(ChannelTest, HonestRebuttalVerifies) {
  Rig s = make_rig(GetParam(), 12);
  auto a = auditor_of(s);
  auto srv = server_of(s);
  for (int i = 0; i < 3; ++i) a.accept(*srv.handle(a.next_query()).response);
  const por::Query& last = a.sent_queries().back();
  EXPECT_EQ(por::verify_encoded(last.entries, srv.rebuttal(last), *s.pk, s.params.fileid),
            por::VerifyStatus::kValid);
}

TEST(ChannelAub, PrivacyCap) {
  Rig s = make_rig(Scheme::kAuB, 13, 12, 3, 4);
  s.params.max_queries = 2;
  auto a = auditor_of(s);
  auto srv = server_of(s);
  for (int i = 0; i < 2; ++i) {
    auto r = srv.handle(a.next_query());
    ASSERT_TRUE(r.response);
    EXPECT_EQ(a.accept(*r.response), Decision::kContinue);
  }
  auto r = srv.handle(a.next_query());
  EXPECT_FALSE(r.response);
  EXPECT_EQ(r.complaint, ComplaintReason::kPrivacyCap);
  ledger::ClosePayload p = srv.complaint_payload();
  EXPECT_TRUE(p.complaint);
  EXPECT_EQ(p.queries.size(), 3u);
}

TEST(ChannelPpaub, MaskedResponsesHaveNoCap) {
  Rig s = make_rig(Scheme::kPPAuB, 13, 12, 3, 4);
  s.params.max_queries = 1;
  auto a = auditor_of(s);
  auto srv = server_of(s);
  for (int i = 0; i < 4; ++i) {
    auto r = srv.handle(a.next_query());
    ASSERT_TRUE(r.response);
    a.accept(*r.response);
  }
  EXPECT_EQ(a.decision(), Decision::kCloseOk);
}

TEST(Messages, CodecAndSignature) {
  Rig s = make_rig(Scheme::kPPAuB, 14);
  ChannelMsg m = make_msg(s.params.channel_id, 7, MsgKind::kQuery, Bytes{1, 2, 3}, s.auditor);
  ChannelMsg d = ChannelMsg::decode(m.encode());
  EXPECT_EQ(d.encode(), m.encode());
  EXPECT_TRUE(verify_msg(d, s.auditor.verify_key));
  EXPECT_FALSE(verify_msg(d, s.server.verify_key));
  d.nonce = 8;
  EXPECT_FALSE(verify_msg(d, s.auditor.verify_key));
  Bytes enc = m.encode();
  enc.pop_back();
  EXPECT_THROW(ChannelMsg::decode(enc), FormatError);
}

INSTANTIATE_TEST_SUITE_P(Schemes, ChannelTest, ::testing::Values(Scheme::kAuB, Scheme::kPPAuB),
                         [](const auto& info) { return std::string(por::scheme_name(info.param)); });

}  // namespace
}  // namespace porchain::channel
