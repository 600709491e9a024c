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

#include <boost/math/distributions/chi_squared.hpp>

#include <set>

#include "oracle.hpp"
#include "porchain/common/error.hpp"
#include "porchain/crypto/domain.hpp"
#include "porchain/crypto/group.hpp"
#include "porchain/crypto/hash.hpp"
#include "porchain/crypto/signature.hpp"
#include "porchain/crypto/xof.hpp"

namespace porchain::crypto {
namespace {

Hash32 seed_of(uint64_t v) {
  Hash32 s{};
  for (int k = 0; k < 8; ++k) s[31 - k] = static_cast<uint8_t>(v >> (8 * k));
  return s;
}

TEST(Scalar, CanonicalRoundTrip) {
  XofSampler rng(seed_of(1), "test/scalar");
  for (int i = 0; i < 200; ++i) {
    Scalar x = rng.scalar();
    auto enc = x.to_bytes();
    EXPECT_EQ(enc.size(), Scalar::kEncodedSize);
    EXPECT_EQ(Scalar::from_canonical(enc), x);
    EXPECT_EQ(testing::to_mpz(x) < testing::group_order(), true);
  }
}

TEST(Scalar, RejectsNonCanonical) {
  auto p_bytes = from_hex("73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
  EXPECT_FALSE(Scalar::try_from_canonical(p_bytes));
  Bytes all_ff(32, 0xff);
  EXPECT_FALSE(Scalar::try_from_canonical(all_ff));
  Bytes short_enc(31, 0);
  EXPECT_FALSE(Scalar::try_from_canonical(short_enc));
  p_bytes.back() = 0;  // p - 1
  EXPECT_TRUE(Scalar::try_from_canonical(p_bytes));
}

TEST(Scalar, ArithmeticMatchesBigIntegers) {
  XofSampler rng(seed_of(2), "test/arith");
  for (int i = 0; i < 100; ++i) {
    Scalar a = rng.scalar(), b = rng.scalar();
    mpz_class za = testing::to_mpz(a), zb = testing::to_mpz(b);
    EXPECT_EQ(testing::to_mpz(a + b), testing::mod_p(za + zb));
    EXPECT_EQ(testing::to_mpz(a - b), testing::mod_p(za - zb));
    EXPECT_EQ(testing::to_mpz(a * b), testing::mod_p(za * zb));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar::one());
  }
  EXPECT_THROW(Scalar::zero().inverse(), ParameterError);
}

TEST(Scalar, SmallBigEndian) {
  Bytes one_byte{0xab};
  EXPECT_EQ(Scalar::from_small_be(one_byte), Scalar::from_u64(0xab));
  Bytes wide(31, 0xff);
  Scalar w = Scalar::from_small_be(wide);
  Bytes back(31);
  w.to_small_be(back.data(), back.size());
  EXPECT_EQ(back, wide);
}

TEST(Groups, EncodingRoundTrip) {
  XofSampler rng(seed_of(3), "test/groups");
  for (int i = 0; i < 20; ++i) {
    Scalar k = rng.scalar();
    G1 p = G1::generator() * k;
    G2 q = G2::generator() * k;
    EXPECT_EQ(G1::from_compressed(p.to_compressed()), p);
    EXPECT_EQ(G2::from_compressed(q.to_compressed()), q);
    GT t = pairing(p, G2::generator());
    Bytes tb = t.to_bytes();
    EXPECT_EQ(tb.size(), GT::kEncodedSize);
    EXPECT_EQ(GT::from_bytes(tb), t);
  }
  EXPECT_EQ(G1::from_compressed(G1::identity().to_compressed()), G1::identity());
  Bytes junk(48, 0x11);
  EXPECT_FALSE(G1::try_from_compressed(junk));
  Bytes bad_gt(GT::kEncodedSize, 0x01);
  EXPECT_FALSE(GT::try_from_bytes(bad_gt));
}

TEST(Pairing, NonDegenerate) {
  EXPECT_FALSE(pairing(G1::generator(), G2::generator()).is_one());
  EXPECT_TRUE(pairing(G1::identity(), G2::generator()).is_one());
}

TEST(Pairing, BilinearOverRandomPairs) {
  XofSampler rng(seed_of(4), "test/bilinear");
  const GT base = pairing(G1::generator(), G2::generator());
  for (int i = 0; i < 100; ++i) {
    Scalar a = rng.scalar(), b = rng.scalar();
    EXPECT_EQ(pairing(G1::generator() * a, G2::generator() * b), base.pow(a * b)) << "pair " << i;
  }
}

TEST(Pairing, ProductMatchesIndividualPairings) {
  XofSampler rng(seed_of(5), "test/product");
  std::vector<std::pair<G1, G2>> terms;
  GT expected;
  for (int i = 0; i < 4; ++i) {
    G1 p = G1::generator() * rng.scalar();
    G2 q = G2::generator() * rng.scalar();
    terms.emplace_back(p, q);
    expected *= pairing(p, q);
  }
  EXPECT_EQ(pairing_product(terms), expected);
}

TEST(Groups, MultiExpMatchesNaiveSum) {
  XofSampler rng(seed_of(6), "test/msm");
  for (size_t n : {0u, 1u, 2u, 7u, 64u, 300u}) {
    std::vector<G1> pts;
    std::vector<Scalar> ks;
    G1 naive;
    for (size_t i = 0; i < n; ++i) {
      pts.push_back(G1::generator() * rng.scalar());
      ks.push_back(i % 5 == 3 ? Scalar::zero() : rng.scalar());
      naive += pts.back() * ks.back();
    }
    EXPECT_EQ(multi_exp(pts, ks), naive) << "n=" << n;
    if (n > 0) EXPECT_EQ(G1Batch(pts).multi_exp(ks), naive) << "n=" << n;
  }
}

TEST(GtPow, MatchesRepeatedMultiplication) {
  GT base = pairing(G1::generator(), G2::generator());
  GT acc;
  for (uint64_t k = 0; k < 20; ++k) {
    EXPECT_EQ(base.pow(Scalar::from_u64(k)), acc);
    acc *= base;
  }
  EXPECT_EQ(base * base.inverse(), GT::one());
}

TEST(HashToG1, DeterministicAndDomainSeparated) {
  Bytes one = u64_be(1);
  EXPECT_EQ(hash_to_g1(domain::kAubBlockHash, one), hash_to_g1(domain::kAubBlockHash, one));
  EXPECT_NE(hash_to_g1(domain::kAubBlockHash, one), hash_to_g1(domain::kPpaubBlockHash, one));
  EXPECT_THROW(hash_to_g1("", one), ParameterError);
}

TEST(HashToG1, DistinctPointsForDistinctIndices) {
  XofSampler rng(seed_of(7), "test/fileid");
  auto fid = rng.scalar().to_bytes();
  std::set<std::string> seen;
  for (uint64_t i = 1; i <= 64; ++i) {
    Bytes w(fid.begin(), fid.end());
    put_u64_be(w, i);
    G1 p = hash_to_g1(domain::kPpaubBlockHash, w);
    EXPECT_FALSE(p.is_identity());
    auto enc = p.to_compressed();
    seen.insert(to_hex(enc));
  }
  EXPECT_EQ(seen.size(), 64u);
}

TEST(HashGtToScalar, NoCollisionsOverFreshCommitments) {
  XofSampler rng(seed_of(8), "test/h2");
  const GT e = pairing(G1::generator() * rng.scalar(), G2::generator() * rng.scalar());
  std::set<std::string> gammas;
  int trials = 0;
  for (int i = 0; i < 1000; ++i) {
    GT r1 = e.pow(rng.scalar());
    GT r2 = e.pow(rng.scalar());
    Scalar g1 = hash_gt_to_scalar(r1), g2 = hash_gt_to_scalar(r2);
    EXPECT_EQ(hash_gt_to_scalar(r1), g1);
    EXPECT_NE(g1, g2);
    gammas.insert(g1.to_hex());
    gammas.insert(g2.to_hex());
    ++trials;
  }
  EXPECT_EQ(gammas.size(), static_cast<size_t>(2 * trials));
}

TEST(Signature, SignVerify) {
  XofSampler rng(seed_of(9), "test/sig");
  SigKeypair a = SigKeypair::generate(rng), b = SigKeypair::generate(rng);
  Bytes msg = rng.bytes(100);
  Bytes sig = sign(msg, a);
  EXPECT_TRUE(sig_verify(msg, sig, a.verify_key));
  EXPECT_FALSE(sig_verify(msg, sig, b.verify_key));
  for (size_t bit = 0; bit < msg.size() * 8; bit += 37) {
    Bytes m2 = msg;
    m2[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    EXPECT_FALSE(sig_verify(m2, sig, a.verify_key));
  }
  EXPECT_FALSE(sig_verify(msg, Bytes(10, 0), a.verify_key));
  EXPECT_FALSE(sig_verify(msg, sig, Bytes(5, 0)));
  EXPECT_FALSE(sig_verify(msg, Bytes{}, a.verify_key));
}

TEST(Signature, SeededKeysAreReproducible) {
  Hash32 s = seed_of(10);
  EXPECT_EQ(SigKeypair::from_seed(s).verify_key, SigKeypair::from_seed(s).verify_key);
}

TEST(Xof, PureFunctionOfSeedAndTag) {
  XofSampler a(seed_of(11), "A"), b(seed_of(11), "A"), c(seed_of(11), "B"), d(seed_of(12), "A");
  Bytes ba = a.bytes(200);
  EXPECT_EQ(ba, b.bytes(200));
  EXPECT_NE(ba, c.bytes(200));
  EXPECT_NE(ba, d.bytes(200));
  EXPECT_EQ(a.counter(), 200u);
}

TEST(Xof, KnownAnswer) {
  // ChaCha20 keyed with SHA-256(00000001 || "A" || seed), IETF nonce 0,
  // counter 0; computed independently with Python's cryptography package.
  XofSampler a(seed_of(11), "A");
  EXPECT_EQ(to_hex(a.bytes(16)), "d796c3715d69cd8a3d9130fafe5f0566");
}

TEST(Xof, ChunkedReadsMatchBulkRead) {
  XofSampler a(seed_of(13), "T"), b(seed_of(13), "T");
  Bytes bulk = a.bytes(333);
  Bytes pieces;
  for (size_t n : {1u, 63u, 64u, 65u, 140u}) {
    Bytes part = b.bytes(n);
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  EXPECT_EQ(bulk, pieces);
}

TEST(Xof, ForkGivesIndependentChildren) {
  XofSampler a(seed_of(14), "T"), b(seed_of(14), "T");
  XofSampler ca = a.fork("child"), cb = b.fork("child");
  EXPECT_EQ(ca.bytes(32), cb.bytes(32));
  XofSampler other = a.fork("child");
  EXPECT_NE(other.seed(), ca.seed());
}

TEST(SampleScalars, CountAndDeterminism) {
  XofSampler a(seed_of(15), domain::kQueryCoefficients);
  EXPECT_TRUE(sample_scalars(a, 0).empty());
  XofSampler b(seed_of(15), domain::kQueryCoefficients), c(seed_of(15), domain::kQueryCoefficients);
  auto vb = sample_scalars(b, 50), vc = sample_scalars(c, 50);
  EXPECT_EQ(vb, vc);
  EXPECT_EQ(vb.size(), 50u);
}

TEST(SampleScalars, TopByteChiSquare) {
  // Under uniformity on [0, p), top byte t < 0x73 has probability 2^248 / p
  // and t = 0x73 takes the remainder.
  const mpz_class& p = testing::group_order();
  const mpz_class bucket = mpz_class(1) << 248;
  const int top = static_cast<int>(mpz_class(p >> 248).get_ui());
  std::vector<double> prob(top + 1);
  for (int t = 0; t < top; ++t) prob[t] = mpq_class(bucket, p).get_d();
  prob[top] = mpq_class(p - top * bucket, p).get_d();

  const int samples = 10000;
  XofSampler rng(seed_of(16), "test/chi");
  std::vector<int> counts(top + 1);
  for (const Scalar& x : sample_scalars(rng, samples)) {
    int t = x.to_bytes()[0];
    ASSERT_LE(t, top);
    ++counts[t];
  }
  double chi2 = 0;
  for (int t = 0; t <= top; ++t) {
    double e = prob[t] * samples;
    chi2 += (counts[t] - e) * (counts[t] - e) / e;
  }
  boost::math::chi_squared dist(top);
  double p_value = boost::math::cdf(boost::math::complement(dist, chi2));
  EXPECT_GT(p_value, 0.001) << "chi2=" << chi2;
}

TEST(SampleIndices, FullSubsetIsSorted) {
  XofSampler rng(seed_of(17), domain::kQueryIndices);
  EXPECT_EQ(sample_distinct_indices(rng, 5, 5), (std::vector<uint64_t>{1, 2, 3, 4, 5}));
}

TEST(SampleIndices, DistinctAscendingReproducible) {
  XofSampler a(seed_of(18), domain::kQueryIndices), b(seed_of(18), domain::kQueryIndices);
  auto ia = sample_distinct_indices(a, 100, 10);
  EXPECT_EQ(ia, sample_distinct_indices(b, 100, 10));
  ASSERT_EQ(ia.size(), 10u);
  for (size_t k = 0; k < ia.size(); ++k) {
    EXPECT_GE(ia[k], 1u);
    EXPECT_LE(ia[k], 100u);
    if (k > 0) EXPECT_LT(ia[k - 1], ia[k]);
  }
}

std::vector<int> inclusion_counts(int seeds) {
  std::vector<int> hits(101);
  for (int s = 0; s < seeds; ++s) {
    XofSampler rng(seed_of(100000 + s), domain::kQueryIndices);
    for (uint64_t i : sample_distinct_indices(rng, 100, 10)) ++hits[i];
  }
  return hits;
}

// Per-index frequency within 0.02 of l/n. At 10^4 seeds the per-index
// standard deviation is 0.003.
TEST(SampleIndices, InclusionFrequency) {
  const int seeds = 10000;
  std::vector<int> hits = inclusion_counts(seeds);
  for (int i = 1; i <= 100; ++i) {
    EXPECT_NEAR(static_cast<double>(hits[i]) / seeds, 0.1, 0.02) << "index " << i;
  }
}

// 10^3 seeds: counts over the 100 indices fit the uniform expectation.
TEST(SampleIndices, InclusionGoodnessOfFit) {
  const int seeds = 1000;
  std::vector<int> hits = inclusion_counts(seeds);
  double chi2 = 0;
  long total = 0;
  for (int i = 1; i <= 100; ++i) {
    const double e = 0.1 * seeds;
    chi2 += (hits[i] - e) * (hits[i] - e) / e;
    total += hits[i];
  }
  EXPECT_EQ(total, 10L * seeds);
  boost::math::chi_squared dist(99);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, chi2)), 0.001) << "chi2=" << chi2;
}

TEST(SampleIndices, RejectsBadSizes) {
  XofSampler rng(seed_of(19), domain::kQueryIndices);
  EXPECT_THROW(sample_distinct_indices(rng, 4, 5), ParameterError);
  EXPECT_THROW(sample_distinct_indices(rng, 4, 0), ParameterError);
}

TEST(Hash, TaggedHashFramesTheTag) {
  Bytes data = from_hex("0102");
  Bytes framed = from_hex("00000003616263");
  framed.insert(framed.end(), data.begin(), data.end());
  EXPECT_EQ(tagged_hash("abc", data), sha256(framed));
  EXPECT_EQ(to_hex(sha256(as_bytes("abc"))),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace porchain::crypto
