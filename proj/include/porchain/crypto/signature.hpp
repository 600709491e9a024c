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

#include "porchain/common/bytes.hpp"

namespace porchain::crypto {

class XofSampler;

// Ed25519 identity keys for owner, server and auditor.
struct SigKeypair {
  static constexpr size_t kSigningKeySize = 64;
  static constexpr size_t kVerifyKeySize = 32;
  static constexpr size_t kSignatureSize = 64;

  Bytes signing_key;
  Bytes verify_key;

  static SigKeypair from_seed(ByteView seed32);
  static SigKeypair generate(XofSampler& rng);
};

Bytes sign(ByteView msg, const SigKeypair& key);
// Malformed keys or signatures verify as false.
bool sig_verify(ByteView msg, ByteView sig, ByteView verify_key);

}  // namespace porchain::crypto
