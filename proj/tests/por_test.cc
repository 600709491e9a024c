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
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "oracle.hpp"
#include "porchain/common/error.hpp"
#include "porchain/por/file.hpp"
#include "porchain/por/keys.hpp"
#include "porchain/por/query.hpp"
#include "porchain/por/response.hpp"
#include "porchain/por/verify.hpp"

namespace porchain::por {
namespace {

using crypto::PairingSuite;
using crypto::XofSampler;

Hash32 seed_of(uint64_t v) {
  Hash32 s{};
  for (int k = 0; k < 8; ++k) s[31 - k] = static_cast<uint8_t>(v >> (8 * k));
  return s;
}

struct Fixture {
  OwnerKeys keys;
  PorParams params;
  TaggedFile file;
  Bytes data;
};

Fixture make_aub(uint64_t seed, size_t s, uint64_t n, uint64_t l) {
  XofSampler rng(seed_of(seed), "test/fixture");
  PorParams params = PorParams::aub(s);
  params.l = l;
  Bytes data = rng.bytes(n * params.block_bytes());
  OwnerKeys keys = keygen_aub(PairingSuite::bls12_381(), s, rng);
  TaggedFile file = tag_file(data, params, keys);
  params.n = file.layout.n;
  return {std::move(keys), params, std::move(file), std::move(data)};
}

Fixture make_ppaub(uint64_t seed, uint64_t n, uint64_t l) {
  XofSampler rng(seed_of(seed), "test/fixture");
  PorParams params = PorParams::ppaub();
  params.l = l;
  params.fileid = rng.scalar();
  Bytes data = rng.bytes(n * params.block_bytes());
  OwnerKeys keys = keygen_ppaub(PairingSuite::bls12_381(), rng);
  TaggedFile file = tag_file(data, params, keys);
  params.n = file.layout.n;
  return {std::move(keys), params, std::move(file), std::move(data)};
}

Query single(uint64_t i, Scalar nu) {
  Query q;
  q.entries = {{i, nu}};
  return q;
}

TEST(Params, Defaults) {
  EXPECT_EQ(default_sector_width(), 31u);
  EXPECT_EQ(PorParams::aub().s, 1000u);
  EXPECT_EQ(PorParams::ppaub().s, 1u);
  PorParams bad = PorParams::ppaub();
  bad.s = 2;
  EXPECT_THROW(bad.validate(), ParameterError);
  PorParams wide = PorParams::aub(1);
  wide.sector_width_bytes = 32;
  EXPECT_THROW(wide.validate(), ParameterError);
  EXPECT_EQ(parse_scheme("PPAuB"), Scheme::kPPAuB);
  EXPECT_THROW(parse_scheme("x"), ParameterError);
}

TEST(Chunk, OneByteFile) {
  PorParams p = PorParams::aub(1);
  Bytes data{0x5a};
  auto blocks = chunk_file(data, p);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0][0], Scalar::from_u64(0x5a));
  EXPECT_EQ(unchunk_file(blocks, p.sector_width_bytes, 1), data);
}

TEST(Chunk, ExactFitRoundTrips) {
  PorParams p = PorParams::aub(3);
  XofSampler rng(seed_of(1), "test/chunk");
  Bytes data = rng.bytes(4 * 3 * p.sector_width_bytes);
  auto blocks = chunk_file(data, p);
  EXPECT_EQ(blocks.size(), 4u);
  EXPECT_EQ(unchunk_file(blocks, p.sector_width_bytes, data.size()), data);
}

TEST(Chunk, MegabyteWithNarrowSectors) {
  PorParams p = PorParams::aub(1000);
  p.sector_width_bytes = 19;
  Bytes data(1 << 20, 0x42);
  auto blocks = chunk_file(data, p);
  EXPECT_EQ(blocks.size(), (size_t{1} << 20) / 19000 + 1);
  EXPECT_EQ(blocks.size(), 56u);
  EXPECT_EQ(block_count(data.size(), 1000, 19), 56u);
  EXPECT_EQ(unchunk_file(blocks, 19, data.size()), data);
}

TEST(Chunk, OddLengthsRoundTrip) {
  XofSampler rng(seed_of(2), "test/chunk");
  for (size_t len : {1u, 30u, 31u, 32u, 61u, 62u, 63u, 1000u, 4097u}) {
    for (size_t s : {1u, 2u, 7u}) {
      PorParams p = PorParams::aub(s);
      Bytes data = rng.bytes(len);
      auto blocks = chunk_file(data, p);
      EXPECT_EQ(blocks.size(), block_count(len, s, p.sector_width_bytes));
      EXPECT_EQ(unchunk_file(blocks, p.sector_width_bytes, len), data) << len << "/" << s;
    }
  }
}

TEST(Chunk, RejectsEmpty) {
  EXPECT_THROW(chunk_file(ByteView{}, PorParams::aub(1)), ParameterError);
}

TEST(Keys, AubSingleSectorPairingIdentity) {
  XofSampler rng(seed_of(3), "test/keys");
  OwnerKeys k = keygen_aub(PairingSuite::bls12_381(), 1, rng);
  const G1& u = k.pk.u()[0];
  EXPECT_EQ(crypto::pairing(u * k.sk, k.pk.g()), crypto::pairing(u, k.pk.v()));
  EXPECT_EQ(k.pk.g() * k.sk, k.pk.v());
}

TEST(Keys, AubThousandDistinctGenerators) {
  XofSampler rng(seed_of(4), "test/keys");
  OwnerKeys k = keygen_aub(PairingSuite::bls12_381(), 1000, rng);
  std::set<std::string> seen;
  for (const G1& u : k.pk.u()) seen.insert(to_hex(u.to_compressed()));
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(Keys, TwoCallsGiveDistinctSecrets) {
  XofSampler rng(seed_of(5), "test/keys");
  OwnerKeys a = keygen_aub(PairingSuite::bls12_381(), 2, rng);
  OwnerKeys b = keygen_aub(PairingSuite::bls12_381(), 2, rng);
  EXPECT_NE(a.sk, b.sk);
  EXPECT_THROW(keygen_aub(PairingSuite::bls12_381(), 0, rng), ParameterError);
}

TEST(Keys, PpaubStoresPairing) {
  XofSampler rng(seed_of(6), "test/keys");
  OwnerKeys k = keygen_ppaub(PairingSuite::bls12_381(), rng);
  ASSERT_TRUE(k.pk.e_uv());
  EXPECT_EQ(*k.pk.e_uv(), crypto::pairing(k.pk.u()[0], k.pk.v()));
  EXPECT_EQ(k.pk.g() * k.sk, k.pk.v());
}

TEST(Keys, EncodingRoundTrip) {
  XofSampler rng(seed_of(7), "test/keys");
  for (OwnerKeys k : {keygen_aub(PairingSuite::bls12_381(), 5, rng),
                      keygen_ppaub(PairingSuite::bls12_381(), rng)}) {
    Bytes pub = k.pk.encode();
    PublicKey pk = PublicKey::decode(pub);
    EXPECT_EQ(pk.encode(), pub);
    EXPECT_EQ(pk.digest(), k.pk.digest());
    OwnerKeys back = OwnerKeys::decode_secret(k.encode_secret());
    EXPECT_EQ(back.sk, k.sk);
    EXPECT_EQ(back.pk.encode(), pub);
    Bytes corrupt = pub;
    corrupt[0] = 'X';
    EXPECT_THROW(PublicKey::decode(corrupt), FormatError);
    corrupt = pub;
    corrupt.push_back(0);
    EXPECT_THROW(PublicKey::decode(corrupt), FormatError);
  }
}

TEST(Tags, ZeroBlockIsHashToTheSecret) {
  XofSampler rng(seed_of(8), "test/tags");
  OwnerKeys a = keygen_aub(PairingSuite::bls12_381(), 3, rng);
  EXPECT_EQ(tag_block_aub(7, Block(3), a), aub_block_hash(7) * a.sk);
  OwnerKeys p = keygen_ppaub(PairingSuite::bls12_381(), rng);
  Scalar fid = rng.scalar();
  EXPECT_EQ(tag_block_ppaub(fid, 7, Scalar::zero(), p), ppaub_block_hash(fid, 7) * p.sk);
}

TEST(Tags, SectorPositionMatters) {
  XofSampler rng(seed_of(9), "test/tags");
  OwnerKeys k = keygen_aub(PairingSuite::bls12_381(), 2, rng);
  Scalar a = rng.scalar();
  EXPECT_NE(tag_block_aub(1, {a, Scalar::zero()}, k), tag_block_aub(1, {Scalar::zero(), a}, k));
}

TEST(Tags, FileidSeparatesTags) {
  XofSampler rng(seed_of(10), "test/tags");
  OwnerKeys k = keygen_ppaub(PairingSuite::bls12_381(), rng);
  Scalar m = rng.scalar();
  EXPECT_NE(tag_block_ppaub(rng.scalar(), 1, m, k), tag_block_ppaub(rng.scalar(), 1, m, k));
}

TEST(Tags, EveryTagVerifiesAloneAndDigestsMatch) {
  Fixture a = make_aub(11, 2, 6, 2);
  for (uint64_t i = 1; i <= a.file.layout.n; ++i) {
    Query q = single(i, Scalar::one());
    PorResponse r = gen_response_aub(q, a.file);
    EXPECT_EQ(r.sigma, a.file.tags[i - 1]);
    EXPECT_EQ(r.mu, a.file.blocks[i - 1]);
    EXPECT_EQ(verify_response(q.entries, r, a.keys.pk, std::nullopt), VerifyStatus::kValid);
    EXPECT_EQ(a.file.digests[i - 1], block_digest(a.file.blocks[i - 1], a.file.tags[i - 1]));
  }
  Fixture p = make_ppaub(12, 4, 2);
  XofSampler rng(seed_of(13), "test/r");
  for (uint64_t i = 1; i <= 4; ++i) {
    Query q = single(i, Scalar::one());
    PpaubProof proof = gen_response_ppaub(q, p.file, p.keys.pk, true, std::nullopt, rng);
    EXPECT_EQ(verify_response(q.entries, proof.response, p.keys.pk, p.params.fileid),
              VerifyStatus::kValid);
  }
}

TEST(Tags, FileCodecRoundTrip) {
  for (Fixture f : {make_aub(14, 3, 5, 2), make_ppaub(15, 5, 2)}) {
    TaggedFile back = TaggedFile::decode(f.file.encode_blocks(), f.file.encode_tags());
    EXPECT_EQ(back.layout, f.file.layout);
    EXPECT_EQ(back.blocks, f.file.blocks);
    EXPECT_EQ(back.tags, f.file.tags);
    EXPECT_EQ(back.digests, f.file.digests);
    EXPECT_EQ(unchunk_file(back.blocks, back.layout.sector_width, back.layout.original_length),
              f.data);
    Bytes tags = f.file.encode_tags();
    tags.pop_back();
    EXPECT_THROW(TaggedFile::decode(f.file.encode_blocks(), tags), FormatError);
  }
}

TEST(Query, ForcedSingleIndex) {
  Query q = gen_query(seed_of(16), 1, 1, 0);
  ASSERT_EQ(q.entries.size(), 1u);
  EXPECT_EQ(q.entries[0].index, 1u);
  EXPECT_EQ(q.seq, 0u);
}

TEST(Query, SequenceNumberChangesQuery) {
  Query a = gen_query(seed_of(17), 50, 5, 0), b = gen_query(seed_of(17), 50, 5, 1);
  EXPECT_FALSE(a.same_challenge(b));
  EXPECT_NE(a.entries, b.entries);
  EXPECT_THROW(gen_query(seed_of(17), 4, 5, 0), ParameterError);
}

TEST(Query, RegenerationIsByteIdentical) {
  Query a = gen_query(seed_of(18), 64, 8, 3), b = gen_query(seed_of(18), 64, 8, 3);
  EXPECT_EQ(encode_entries(a.entries), encode_entries(b.entries));
  EXPECT_EQ(a.encode(), b.encode());
}

TEST(Query, EncodingRoundTrip) {
  Query q = gen_query(seed_of(19), 20, 4, 9);
  q.sig = Bytes(64, 0x7e);
  Query back = Query::decode(q.encode());
  EXPECT_TRUE(back.same_challenge(q));
  EXPECT_EQ(back.sig, q.sig);
  EXPECT_EQ(q.encode().size(), 4 + 4 * Query::kEntrySize + 4 + 32 + 4 + 8 + 4 + 64);
  Hash32 c1 = seed_of(1), c2 = seed_of(2);
  EXPECT_NE(q.signing_bytes(c1), q.signing_bytes(c2));
}

TEST(Query, ByteIdenticalAcrossProcesses) {
  const Hash32 seed = seed_of(20);
  Bytes here;
  for (uint64_t seq = 0; seq < 5; ++seq) {
    Bytes e = gen_query(seed, 1000, 20, seq).encode();
    here.insert(here.end(), e.begin(), e.end());
  }
  int fds[2];
  ASSERT_EQ(pipe(fds), 0);
  pid_t pid = fork();
  ASSERT_GE(pid, 0);
  if (pid == 0) {
    close(fds[0]);
    Bytes there;
    for (uint64_t seq = 0; seq < 5; ++seq) {
      Bytes e = gen_query(seed, 1000, 20, seq).encode();
      there.insert(there.end(), e.begin(), e.end());
    }
    size_t off = 0;
    while (off < there.size()) {
      ssize_t w = write(fds[1], there.data() + off, there.size() - off);
      if (w <= 0) _exit(1);
      off += static_cast<size_t>(w);
    }
    close(fds[1]);
    _exit(0);
  }
  close(fds[1]);
  Bytes received;
  uint8_t buf[4096];
  ssize_t got;
  while ((got = read(fds[0], buf, sizeof(buf))) > 0) received.insert(received.end(), buf, buf + got);
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  ASSERT_TRUE(WIFEXITED(status) && WEXITSTATUS(status) == 0);
  EXPECT_EQ(received, here);
}

TEST(ResponseAub, ZeroCoefficient) {
  Fixture f = make_aub(21, 1, 3, 1);
  PorResponse r = gen_response_aub(single(2, Scalar::zero()), f.file);
  EXPECT_TRUE(r.sigma.is_identity());
  EXPECT_EQ(r.mu, std::vector<Scalar>{Scalar::zero()});
}

TEST(ResponseAub, MatchesBigIntegerOracle) {
  Fixture f = make_aub(22, 3, 8, 4);
  Query q = gen_query(seed_of(23), f.params, 0);
  PorResponse r = gen_response_aub(q, f.file);
  for (size_t j = 0; j < 3; ++j) {
    mpz_class acc = 0;
    for (const QueryEntry& e : q.entries) {
      acc += testing::to_mpz(e.coeff) * testing::to_mpz(f.file.blocks[e.index - 1][j]);
    }
    EXPECT_EQ(testing::to_mpz(r.mu[j]), testing::mod_p(acc));
  }
  EXPECT_EQ(verify_response(q.entries, r, f.keys.pk, std::nullopt), VerifyStatus::kValid);
}

TEST(ResponseAub, RejectsOutOfRangeIndex) {
  Fixture f = make_aub(24, 1, 3, 1);
  EXPECT_THROW(gen_response_aub(single(4, Scalar::one()), f.file), ParameterError);
  EXPECT_THROW(gen_response_aub(single(0, Scalar::one()), f.file), ParameterError);
}

TEST(VerifyAub, TamperedMuFails) {
  Fixture f = make_aub(25, 2, 8, 3);
  Query q = gen_query(seed_of(26), f.params, 0);
  PorResponse r = gen_response_aub(q, f.file);
  r.mu[0] += Scalar::one();
  EXPECT_EQ(verify_response(q.entries, r, f.keys.pk, std::nullopt), VerifyStatus::kInvalid);
}

TEST(VerifyAub, EmptySetIsVacuouslyValid) {
  Fixture f = make_aub(27, 2, 2, 1);
  std::vector<Scalar> zeros(2);
  EXPECT_EQ(verify_aub({}, G1::identity(), zeros, f.keys.pk), VerifyStatus::kValid);
}

TEST(VerifyAub, MalformedInputsAreDistinguished) {
  Fixture f = make_aub(28, 2, 4, 2);
  Query q = gen_query(seed_of(29), f.params, 0);
  PorResponse r = gen_response_aub(q, f.file);
  std::vector<Scalar> short_mu{r.mu[0]};
  EXPECT_EQ(verify_aub(q.entries, r.sigma, short_mu, f.keys.pk), VerifyStatus::kMalformed);
  std::vector<QueryEntry> zero_idx = q.entries;
  zero_idx[0].index = 0;
  EXPECT_EQ(verify_aub(zero_idx, r.sigma, r.mu, f.keys.pk), VerifyStatus::kMalformed);
  Bytes proof = r.encode_proof();
  EXPECT_EQ(verify_encoded(q.entries, proof, f.keys.pk, std::nullopt), VerifyStatus::kValid);
  Bytes bad = proof;
  bad[4] ^= 0x01;  // inside the compressed sigma
  EXPECT_NE(verify_encoded(q.entries, bad, f.keys.pk, std::nullopt), VerifyStatus::kValid);
  bad = proof;
  bad.resize(bad.size() - 1);
  EXPECT_EQ(verify_encoded(q.entries, bad, f.keys.pk, std::nullopt), VerifyStatus::kMalformed);
  std::fill(bad.begin() + 4, bad.begin() + 52, 0xff);
  EXPECT_EQ(verify_encoded(q.entries, bad, f.keys.pk, std::nullopt), VerifyStatus::kMalformed);
}

TEST(ResponsePpaub, ZeroSumGivesMaskOnly) {
  Fixture f = make_ppaub(30, 3, 1);
  XofSampler rng(seed_of(31), "test/r");
  PpaubProof p = gen_response_ppaub(single(2, Scalar::zero()), f.file, f.keys.pk, true,
                                    std::nullopt, rng);
  EXPECT_EQ(p.response.mu[0], p.r);
  EXPECT_EQ(*p.response.R, f.keys.pk.e_uv()->pow(p.r));
  EXPECT_THROW(gen_response_ppaub(single(1, Scalar::one()), f.file, f.keys.pk, false,
                                  std::nullopt, rng),
               ParameterError);
}

TEST(ResponsePpaub, FreshMasksDifferAndVerify) {
  Fixture f = make_ppaub(32, 6, 3);
  Query q = gen_query(seed_of(33), f.params, 0);
  XofSampler rng(seed_of(34), "test/r");
  PpaubProof a = gen_response_ppaub(q, f.file, f.keys.pk, true, std::nullopt, rng);
  PpaubProof b = gen_response_ppaub(q, f.file, f.keys.pk, true, std::nullopt, rng);
  EXPECT_NE(a.response.mu[0], b.response.mu[0]);
  EXPECT_EQ(verify_response(q.entries, a.response, f.keys.pk, f.params.fileid), VerifyStatus::kValid);
  EXPECT_EQ(verify_response(q.entries, b.response, f.keys.pk, f.params.fileid), VerifyStatus::kValid);

  // mu1 - mu2 = gamma1 X - gamma2 X + (r1 - r2), with X computed here.
  mpz_class x = 0;
  for (const QueryEntry& e : q.entries) {
    x += testing::to_mpz(e.coeff) * testing::to_mpz(f.file.blocks[e.index - 1][0]);
  }
  mpz_class g1 = testing::to_mpz(crypto::hash_gt_to_scalar(*a.response.R));
  mpz_class g2 = testing::to_mpz(crypto::hash_gt_to_scalar(*b.response.R));
  mpz_class lhs = testing::mod_p(testing::to_mpz(a.response.mu[0]) - testing::to_mpz(b.response.mu[0]));
  mpz_class rhs = testing::mod_p(g1 * x - g2 * x + testing::to_mpz(a.r) - testing::to_mpz(b.r));
  EXPECT_EQ(lhs, rhs);
}

TEST(VerifyPpaub, TamperedCommitmentFails) {
  Fixture f = make_ppaub(35, 4, 2);
  Query q = gen_query(seed_of(36), f.params, 0);
  XofSampler rng(seed_of(37), "test/r");
  PpaubProof p = gen_response_ppaub(q, f.file, f.keys.pk, true, std::nullopt, rng);
  PorResponse t = p.response;
  *t.R *= *f.keys.pk.e_uv();
  EXPECT_EQ(verify_response(q.entries, t, f.keys.pk, f.params.fileid), VerifyStatus::kInvalid);
  PorResponse no_r = p.response;
  no_r.R.reset();
  EXPECT_EQ(verify_response(q.entries, no_r, f.keys.pk, f.params.fileid), VerifyStatus::kMalformed);
  EXPECT_EQ(verify_response(q.entries, p.response, f.keys.pk, std::nullopt),
            VerifyStatus::kMalformed);
  EXPECT_EQ(verify_encoded(q.entries, p.response.encode_proof(), f.keys.pk, f.params.fileid),
            VerifyStatus::kValid);
}

TEST(VerifyPpaub, WrongFileidFails) {
  Fixture f = make_ppaub(38, 4, 2);
  Query q = gen_query(seed_of(39), f.params, 0);
  XofSampler rng(seed_of(40), "test/r");
  PpaubProof p = gen_response_ppaub(q, f.file, f.keys.pk, true, std::nullopt, rng);
  EXPECT_EQ(verify_response(q.entries, p.response, f.keys.pk, *f.params.fileid + Scalar::one()),
            VerifyStatus::kInvalid);
}

TEST(Aggregate, EmptyAccumulatorIsIdentity) {
  Fixture f = make_aub(41, 2, 4, 2);
  Query q = gen_query(seed_of(42), f.params, 0);
  PorResponse r = gen_response_aub(q, f.file);
  Accumulator acc = aggregate(Accumulator::empty(Scheme::kAuB, 2), q, r);
  EXPECT_EQ(acc.q_all, q.entries);
  EXPECT_EQ(acc.sigma_all, r.sigma);
  EXPECT_EQ(acc.mu_all, r.mu);
  EXPECT_EQ(verify_accumulator(Accumulator::empty(Scheme::kAuB, 2), f.keys.pk, std::nullopt),
            VerifyStatus::kValid);
}

TEST(Aggregate, OrderDoesNotMatter) {
  Fixture f = make_aub(43, 2, 10, 3);
  std::vector<Query> qs;
  std::vector<PorResponse> rs;
  for (uint64_t seq = 0; seq < 4; ++seq) {
    qs.push_back(gen_query(seed_of(44), f.params, seq));
    rs.push_back(gen_response_aub(qs.back(), f.file));
  }
  Accumulator fwd = Accumulator::empty(Scheme::kAuB, 2), rev = fwd;
  for (size_t k = 0; k < 4; ++k) fwd = aggregate(fwd, qs[k], rs[k]);
  for (size_t k = 4; k-- > 0;) rev = aggregate(rev, qs[k], rs[k]);
  EXPECT_EQ(fwd.sigma_all, rev.sigma_all);
  EXPECT_EQ(fwd.mu_all, rev.mu_all);
  EXPECT_EQ(verify_accumulator(fwd, f.keys.pk, std::nullopt), VerifyStatus::kValid);
}

TEST(Aggregate, SchemeMismatchThrows) {
  Fixture f = make_aub(45, 1, 2, 1);
  Query q = gen_query(seed_of(46), f.params, 0);
  PorResponse r = gen_response_aub(q, f.file);
  EXPECT_THROW(aggregate(Accumulator::empty(Scheme::kPPAuB, 1), q, r), ParameterError);
}

TEST(Aggregate, PpaubSessionWithReusedMask) {
  Fixture f = make_ppaub(47, 8, 3);
  XofSampler rng(seed_of(48), "test/r");
  Accumulator acc = Accumulator::empty(Scheme::kPPAuB, 1);
  std::optional<Scalar> r;
  for (uint64_t seq = 0; seq < 5; ++seq) {
    Query q = gen_query(seed_of(49), f.params, seq);
    PpaubProof p = gen_response_ppaub(q, f.file, f.keys.pk, seq == 0, r, rng);
    r = p.r;
    acc = aggregate(acc, q, p.response);
    EXPECT_EQ(verify_accumulator(acc, f.keys.pk, f.params.fileid), VerifyStatus::kValid)
        << "after " << seq + 1 << " responses";
  }
  // A response made with a different mask carries a different R.
  Query q = gen_query(seed_of(49), f.params, 5);
  PpaubProof other = gen_response_ppaub(q, f.file, f.keys.pk, true, std::nullopt, rng);
  EXPECT_THROW(aggregate(acc, q, other.response), ParameterError);
}

TEST(Extract, LinearSolveRecoversBlocks) {
  for (uint64_t n : {1u, 5u, 16u}) {
    Fixture f = make_aub(50 + n, 1, n, n);
    std::vector<std::vector<mpz_class>> a;
    std::vector<mpz_class> b;
    for (uint64_t seq = 0; seq < n; ++seq) {
      Query q = gen_query(seed_of(60), f.params, seq);
      PorResponse r = gen_response_aub(q, f.file);
      ASSERT_EQ(verify_response(q.entries, r, f.keys.pk, std::nullopt), VerifyStatus::kValid);
      std::vector<mpz_class> row(n, 0);
      for (const QueryEntry& e : q.entries) row[e.index - 1] = testing::to_mpz(e.coeff);
      a.push_back(row);
      b.push_back(testing::to_mpz(r.mu[0]));
    }
    auto m = testing::solve_mod_p(a, b);
    ASSERT_TRUE(m.has_value());
    for (uint64_t i = 0; i < n; ++i) EXPECT_EQ((*m)[i], testing::to_mpz(f.file.blocks[i][0]));
  }
}

TEST(Cost, ThousandSectorBlock) {
  auto t0 = std::chrono::steady_clock::now();
  Fixture f = make_aub(70, 1000, 4, 2);
  auto t1 = std::chrono::steady_clock::now();
  Query q = gen_query(seed_of(71), f.params, 0);
  PorResponse r = gen_response_aub(q, f.file);
  auto t2 = std::chrono::steady_clock::now();
  EXPECT_EQ(verify_response(q.entries, r, f.keys.pk, std::nullopt), VerifyStatus::kValid);
  auto t3 = std::chrono::steady_clock::now();
  auto ms = [](auto d) { return std::chrono::duration<double, std::milli>(d).count(); };
  std::printf("keygen+tag %.1f ms, prove %.1f ms, verify %.1f ms\n", ms(t1 - t0), ms(t2 - t1),
              ms(t3 - t2));
}

}  // namespace
}  // namespace porchain::por
