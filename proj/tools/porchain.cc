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

// porchain: key generation, scenario runs and benchmarks.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "porchain/actors/scenario.hpp"
#include "porchain/common/error.hpp"
#include "porchain/common/format.hpp"
#include "porchain/crypto/hash.hpp"
#include "porchain/por/response.hpp"
#include "porchain/por/verify.hpp"

namespace fs = std::filesystem;
using namespace porchain;

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Up to 64 hex digits, left-padded to 32 bytes.
Hash32 parse_seed(const std::string& hex) {
  Bytes b;
  try {
    b = from_hex(hex.size() % 2 ? "0" + hex : hex);
  } catch (const Error&) {
    throw UsageError("seed is not hex: " + hex);
  }
  if (b.empty() || b.size() > 32) throw UsageError("seed must be 1 to 32 bytes of hex");
  Hash32 h{};
  std::copy(b.begin(), b.end(), h.end() - b.size());
  return h;
}

// --seed, then PORCHAIN_SEED, then fresh entropy (printed so the run can be
// repeated).
Hash32 resolve_seed(const std::string& flag, bool* from_entropy = nullptr) {
  if (from_entropy) *from_entropy = false;
  if (!flag.empty()) return parse_seed(flag);
  if (const char* env = std::getenv("PORCHAIN_SEED"); env && *env) return parse_seed(env);
  if (from_entropy) *from_entropy = true;
  return crypto::XofSampler::from_entropy("CLI/SEED").bytes32();
}

por::Scheme scheme_arg(const std::string& s) {
  try {
    return por::parse_scheme(s);
  } catch (const Error&) {
    throw UsageError("unknown scheme " + s);
  }
}

// 64, 1K, 10M, 2G (binary multiples).
uint64_t parse_size(std::string s) {
  if (s.empty()) throw UsageError("empty size");
  uint64_t mult = 1;
  switch (std::toupper(static_cast<unsigned char>(s.back()))) {
    case 'K': mult = 1ull << 10; break;
    case 'M': mult = 1ull << 20; break;
    case 'G': mult = 1ull << 30; break;
    default: break;
  }
  if (mult != 1) s.pop_back();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("bad size: " + s);
  }
  const uint64_t v = std::stoull(s) * mult;
  if (v == 0) throw UsageError("size must be positive");
  return v;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Bytes pseudo_file(const Hash32& seed, uint64_t size) {
  crypto::XofSampler rng(seed, "CLI/FILE");
  return rng.bytes(size);
}

// --- keygen ----------------------------------------------------------------

struct KeygenArgs {
  std::string scheme = "aub";
  size_t sectors = 1000;
  std::string out;
  std::string seed;
};

int cmd_keygen(const KeygenArgs& a) {
  const por::Scheme scheme = scheme_arg(a.scheme);
  if (scheme == por::Scheme::kAuB && a.sectors == 0) throw UsageError("--sectors must be >= 1");
  crypto::XofSampler rng(resolve_seed(a.seed), "CLI/KEYGEN");
  const auto suite = crypto::PairingSuite::bls12_381();
  por::OwnerKeys keys = scheme == por::Scheme::kAuB ? por::keygen_aub(suite, a.sectors, rng)
                                                    : por::keygen_ppaub(suite, rng);
  const fs::path dir(a.out);
  try {
    fs::create_directories(dir);
  } catch (const fs::filesystem_error& e) {
    throw IoError(std::string("cannot create output directory: ") + e.what());
  }
  const Bytes pk = keys.pk.encode();
  write_file(dir / "pk.bin", pk);
  write_file(dir / "sk.bin", keys.encode_secret());
  std::cout << "scheme " << por::scheme_name(scheme) << "\n"
            << "sectors " << keys.pk.sectors() << "\n"
            << "pk_digest " << to_hex(crypto::sha256(pk)) << "\n";
  return kExitMatch;
}

// --- run -------------------------------------------------------------------

struct RunArgs {
  std::string scenario;
  std::string scheme = "aub";
  std::string file;
  std::string size = "64K";
  uint64_t audit_count = 10;
  uint64_t query_size = 5;
  size_t sectors = 1000;
  std::optional<uint64_t> privacy_cap;
  double block_wait_ms = 0;
  std::string seed;
  std::string out = ".";
};

int cmd_run(const RunArgs& a) {
  if (!actors::find_scenario(a.scenario)) {
    std::string names;
    for (const auto& s : actors::scenario_registry()) names += " " + s.name;
    throw UsageError("unknown scenario " + a.scenario + "; known:" + names);
  }
  bool entropy = false;
  actors::ScenarioConfig cfg;
  cfg.name = a.scenario;
  cfg.scheme = scheme_arg(a.scheme);
  cfg.seed = resolve_seed(a.seed, &entropy);
  if (entropy) std::cerr << "seed " << to_hex(cfg.seed) << "\n";
  if (!a.file.empty()) {
    try {
      cfg.data = read_file(a.file);
    } catch (const IoError& e) {
      throw UsageError(e.what());
    }
    if (cfg.data.empty()) throw UsageError("file is empty: " + a.file);
  } else {
    cfg.data = pseudo_file(cfg.seed, parse_size(a.size));
  }
  cfg.audit_count = a.audit_count;
  cfg.query_size = a.query_size;
  cfg.sectors = a.sectors;
  cfg.privacy_cap = a.privacy_cap;
  cfg.block_wait_ms = a.block_wait_ms;
  const fs::path out(a.out);
  fs::create_directories(out);
  cfg.work_dir = out;

  actors::ScenarioReport rep;
  try {
    rep = actors::run_scenario(cfg);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  const std::string body = rep.events.jsonl();
  write_file(out / "report.jsonl", as_bytes(body));

  const actors::RunMetrics& m = rep.metrics;
  const std::string csv = actors::RunMetrics::csv_header() + "\n" + m.csv_row() + "\n";
  write_file(out / "metrics.csv", as_bytes(csv));
  nlohmann::ordered_json mj{{"scenario", rep.name},
                            {"scheme", por::scheme_name(rep.scheme)},
                            {"blocks", m.blocks},
                            {"query_count", m.query_count},
                            {"close_payload_bytes", m.close_payload_bytes},
                            {"upload_ms", m.upload_ms},
                            {"tag_ms", m.tag_ms},
                            {"prove_ms", m.prove_ms},
                            {"verify_ms", m.verify_ms},
                            {"ledger_wait_ms", m.ledger_wait_ms}};
  write_file(out / "metrics.json", as_bytes(mj.dump(2) + "\n"));

  std::string verdict = "none";
  if (!rep.verdicts.empty()) {
    verdict = std::string(ledger::outcome_name(rep.verdicts.back().outcome)) + "/" +
              std::string(ledger::reason_name(rep.verdicts.back().reason));
  }
  std::cout << rep.name << " " << por::scheme_name(rep.scheme) << " verdict " << verdict << " "
            << (rep.passed ? "match" : "MISMATCH") << "\n";
  for (const auto& x : rep.assertions) {
    if (!x.passed) std::cout << "  failed " << x.name << ": " << x.detail << "\n";
  }
  return rep.passed ? kExitMatch : kExitMismatch;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string sizes = "1K,1M,10M,100M";
  std::string scheme = "aub";
  size_t sectors = 1000;
  uint64_t query_size = 5;
  unsigned audits = 3;
  unsigned threads = 1;
  std::string seed;
};

int cmd_bench(const BenchArgs& a) {
  const por::Scheme scheme = scheme_arg(a.scheme);
  std::vector<uint64_t> sizes;
  std::stringstream ss(a.sizes);
  for (std::string tok; std::getline(ss, tok, ',');) sizes.push_back(parse_size(tok));
  if (sizes.empty()) throw UsageError("no file sizes given");
  if (a.audits == 0) throw UsageError("--audits must be >= 1");
  const Hash32 seed = resolve_seed(a.seed);
  const auto suite = crypto::PairingSuite::bls12_381();
  crypto::XofSampler rng(seed, "CLI/BENCH");

  std::cout << "size_bytes,blocks,upload_ms,tag_ms,prove_ms,verify_ms\n";
  for (uint64_t size : sizes) {
    const Bytes data = pseudo_file(seed, size);
    por::PorParams params = scheme == por::Scheme::kAuB ? por::PorParams::aub(a.sectors)
                                                        : por::PorParams::ppaub();
    crypto::XofSampler krng = rng.fork("bench/keys");
    por::OwnerKeys keys = scheme == por::Scheme::kAuB ? por::keygen_aub(suite, a.sectors, krng)
                                                      : por::keygen_ppaub(suite, krng);
    if (scheme == por::Scheme::kPPAuB) params.fileid = rng.scalar();

    auto t0 = std::chrono::steady_clock::now();
    por::TaggedFile file = por::tag_file(data, params, keys, a.threads);
    const double tag_ms = ms_since(t0);

    // Upload: what the server does on receipt, persist and hash each block.
    const fs::path dir = fs::temp_directory_path() / ("porchain-bench-" + std::to_string(size));
    fs::create_directories(dir);
    t0 = std::chrono::steady_clock::now();
    write_file(dir / "blocks.bin", file.encode_blocks());
    write_file(dir / "tags.bin", file.encode_tags());
    for (size_t i = 0; i < file.blocks.size(); ++i) (void)por::block_digest(file.blocks[i], file.tags[i]);
    const double upload_ms = ms_since(t0);
    fs::remove_all(dir);

    const uint64_t l = std::min<uint64_t>(a.query_size, file.layout.n);
    double prove = 0, verify = 0;
    crypto::XofSampler mask = rng.fork("bench/mask");
    for (unsigned j = 0; j < a.audits; ++j) {
      por::Query q = por::gen_query(rng.bytes32(), file.layout.n, l, 0);
      t0 = std::chrono::steady_clock::now();
      por::PorResponse resp =
          scheme == por::Scheme::kAuB
              ? por::gen_response_aub(q, file)
              : por::gen_response_ppaub(q, file, keys.pk, true, std::nullopt, mask).response;
      prove += ms_since(t0);
      t0 = std::chrono::steady_clock::now();
      const auto st = por::verify_response(q.entries, resp, keys.pk, params.fileid);
      verify += ms_since(t0);
      if (st != por::VerifyStatus::kValid) throw ProtocolError("benchmark proof failed to verify");
    }
    std::printf("%llu,%llu,%.3f,%.3f,%.3f,%.3f\n", static_cast<unsigned long long>(size),
                static_cast<unsigned long long>(file.layout.n), upload_ms, tag_ms,
                prove / a.audits, verify / a.audits);
    std::fflush(stdout);
  }
  return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"porchain: audited storage with on-ledger settlement"};
  app.require_subcommand(1);

  KeygenArgs ka;
  auto* keygen = app.add_subcommand("keygen", "generate owner keys");
  keygen->add_option("--scheme", ka.scheme, "aub or ppaub")->capture_default_str();
  keygen->add_option("--sectors", ka.sectors, "sectors per block (aub)")->capture_default_str();
  keygen->add_option("--out", ka.out, "output directory")->required();
  keygen->add_option("--seed", ka.seed, "hex seed");

  RunArgs ra;
  auto* run = app.add_subcommand("run", "run a scenario on a fresh ledger");
  run->add_option("--scenario", ra.scenario, "scenario name")->required();
  run->add_option("--scheme", ra.scheme, "aub or ppaub")->capture_default_str();
  run->add_option("--file", ra.file, "file to store");
  run->add_option("--size", ra.size, "size of a generated file when --file is absent")
      ->capture_default_str();
  run->add_option("--audit-count", ra.audit_count, "queries per channel (K)")->capture_default_str();
  run->add_option("--query-size", ra.query_size, "indices per query (l)")->capture_default_str();
  run->add_option("--sectors", ra.sectors, "sectors per block (aub)")->capture_default_str();
  run->add_option("--privacy-cap", ra.privacy_cap, "aub queries the server answers per channel");
  run->add_option("--block-wait-ms", ra.block_wait_ms, "simulated latency per block")
      ->capture_default_str();
  run->add_option("--seed", ra.seed, "hex seed (falls back to PORCHAIN_SEED)");
  run->add_option("--out", ra.out, "output directory")->capture_default_str();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "time tagging, upload, proving and verification");
  bench->add_option("--file-sizes", ba.sizes, "comma separated sizes, K/M/G suffixes")
      ->capture_default_str();
  bench->add_option("--scheme", ba.scheme, "aub or ppaub")->capture_default_str();
  bench->add_option("--sectors", ba.sectors, "sectors per block (aub)")->capture_default_str();
  bench->add_option("--query-size", ba.query_size, "indices per query")->capture_default_str();
  bench->add_option("--audits", ba.audits, "audits averaged per size")->capture_default_str();
  bench->add_option("--threads", ba.threads, "tagging threads")->capture_default_str();
  bench->add_option("--seed", ba.seed, "hex seed (falls back to PORCHAIN_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*keygen) return cmd_keygen(ka);
    if (*run) return cmd_run(ra);
    if (*bench) return cmd_bench(ba);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
