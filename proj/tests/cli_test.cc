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

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "harness.hpp"
#include "porchain/common/format.hpp"
#include "porchain/crypto/hash.hpp"
#include "porchain/por/keys.hpp"

namespace porchain {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " PORCHAIN_CLI " " + args + " 2>/dev/null";
  Result r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, sep);) out.push_back(t);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = testing::scratch_dir("cli"); }
  void TearDown() override { fs::remove_all(dir_); }
  std::string d(const std::string& sub) const { return (dir_ / sub).string(); }
  fs::path dir_;
};

TEST_F(Cli, KeygenAub) {
  Result r = cli("keygen --scheme aub --sectors 1000 --seed 01 --out " + d("k"));
  ASSERT_EQ(r.code, 0);
  Bytes pk = read_file(dir_ / "k" / "pk.bin");
  por::PublicKey key = por::PublicKey::decode(pk);
  EXPECT_EQ(key.sectors(), 1000u);
  EXPECT_NE(r.out.find("pk_digest " + to_hex(crypto::sha256(pk))), std::string::npos);
  por::OwnerKeys sk = por::OwnerKeys::decode_secret(read_file(dir_ / "k" / "sk.bin"));
  EXPECT_EQ(sk.pk.encode(), pk);
}

TEST_F(Cli, KeygenPpaub) {
  ASSERT_EQ(cli("keygen --scheme ppaub --seed 02 --out " + d("k")).code, 0);
  por::PublicKey key = por::PublicKey::decode(read_file(dir_ / "k" / "pk.bin"));
  EXPECT_EQ(key.sectors(), 1u);
  EXPECT_TRUE(key.e_uv().has_value());
}

TEST_F(Cli, KeygenErrors) {
  EXPECT_EQ(cli("keygen --scheme aub --sectors 0 --out " + d("k")).code, 2);
  EXPECT_EQ(cli("keygen --scheme rsa --out " + d("k")).code, 2);
  EXPECT_EQ(cli("keygen --scheme aub").code, 2);
  EXPECT_NE(cli("keygen --scheme ppaub --out /proc/no/such/dir").code, 0);
}

TEST_F(Cli, RunHonestOneMegabyte) {
  crypto::XofSampler rng(testing::seed_from(3), "test/cli");
  write_file(dir_ / "file.bin", rng.bytes(1 << 20));
  Result r = cli("run --scenario honest --scheme aub --file " + d("file.bin") +
                 " --audit-count 10 --query-size 5 --seed 0a --out " + d("out"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("paid_both"), std::string::npos);
  bool verdict = false;
  for (const std::string& line : split(slurp(dir_ / "out" / "report.jsonl"), '\n')) {
    auto j = nlohmann::json::parse(line);
    if (j["event"] == "verdict") {
      verdict = true;
      EXPECT_EQ(j["outcome"], "paid_both");
    }
  }
  EXPECT_TRUE(verdict);
  auto rows = split(slurp(dir_ / "out" / "metrics.csv"), '\n');
  ASSERT_EQ(rows.size(), 2u);
  auto cols = split(rows[1], ',');
  ASSERT_EQ(cols.size(), split(rows[0], ',').size());
  EXPECT_EQ(cols[0], "34");  // 1 MiB in blocks of 1000 x 31 bytes
  EXPECT_EQ(cols[1], "10");
  auto mj = nlohmann::json::parse(slurp(dir_ / "out" / "metrics.json"));
  EXPECT_EQ(mj["prove_ms"].size(), 10u);
  EXPECT_EQ(mj["close_payload_bytes"].get<uint64_t>(), std::stoull(cols[2]));
}

TEST_F(Cli, RunAdversarialScenarioMatches) {
  Result r = cli("run --scenario case1-dropblock --scheme ppaub --size 4K --audit-count 4 "
                 "--query-size 3 --seed 0b --out " + d("out"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("penalize_server"), std::string::npos);
}

TEST_F(Cli, RunMismatchExitsOne) {
  // A cap of one answer makes the server refuse query 2 of an honest run.
  Result r = cli("run --scenario honest --scheme aub --size 4K --sectors 4 --audit-count 3 "
                 "--query-size 2 --privacy-cap 1 --seed 0c --out " + d("out"));
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST_F(Cli, RunUsageErrors) {
  EXPECT_EQ(cli("run --scenario nope --out " + d("o")).code, 2);
  EXPECT_EQ(cli("run --scenario honest --file " + d("missing") + " --out " + d("o")).code, 2);
  EXPECT_EQ(cli("run --scenario honest --seed zz --out " + d("o")).code, 2);
  EXPECT_EQ(cli("run --out " + d("o")).code, 2);
  EXPECT_EQ(cli("run --scenario case2-overquery --scheme ppaub --out " + d("o")).code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST_F(Cli, SeedMakesRunsReproducible) {
  const std::string args =
      "run --scenario case2-misrecord --scheme ppaub --size 3K --audit-count 4 --query-size 2 ";
  ASSERT_EQ(cli(args + "--seed 5eed --out " + d("a")).code, 0);
  ASSERT_EQ(cli(args + "--seed 5eed --out " + d("b")).code, 0);
  ASSERT_EQ(cli(args + "--out " + d("c"), "PORCHAIN_SEED=5eed").code, 0);
  const std::string ra = slurp(dir_ / "a" / "report.jsonl");
  EXPECT_FALSE(ra.empty());
  EXPECT_EQ(ra, slurp(dir_ / "b" / "report.jsonl"));
  EXPECT_EQ(ra, slurp(dir_ / "c" / "report.jsonl"));
  // Non-timing metric columns agree too.
  auto row = [&](const char* sub) {
    auto cols = split(split(slurp(dir_ / sub / "metrics.csv"), '\n')[1], ',');
    return std::vector<std::string>(cols.begin(), cols.begin() + 3);
  };
  EXPECT_EQ(row("a"), row("b"));
}

TEST_F(Cli, Bench) {
  Result r = cli("bench --file-sizes 1K,128K,1M --scheme aub --sectors 1000 --audits 2 --seed 01");
  ASSERT_EQ(r.code, 0);
  auto rows = split(r.out, '\n');
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "size_bytes,blocks,upload_ms,tag_ms,prove_ms,verify_ms");
  std::vector<double> tag;
  for (size_t i = 1; i < rows.size(); ++i) {
    auto cols = split(rows[i], ',');
    ASSERT_EQ(cols.size(), 6u);
    tag.push_back(std::stod(cols[3]));
  }
  EXPECT_EQ(split(rows[1], ',')[0], "1024");
  EXPECT_EQ(split(rows[1], ',')[1], "1");
  EXPECT_EQ(split(rows[3], ',')[1], "34");
  EXPECT_LE(tag[0], tag[1]);
  EXPECT_LE(tag[1], tag[2]);

  EXPECT_EQ(cli("bench --file-sizes 1Q --scheme aub").code, 2);
  EXPECT_EQ(cli("bench --file-sizes 0 --scheme aub").code, 2);
  Result p = cli("bench --file-sizes 1K --scheme ppaub --seed 01");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(split(p.out, '\n').size(), 2u);
}

}  // namespace
}  // namespace porchain
