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

#include "porchain/crypto/signature.hpp"

#include <sodium.h>

#include "porchain/common/error.hpp"
#include "porchain/crypto/xof.hpp"

namespace porchain::crypto {

SigKeypair SigKeypair::from_seed(ByteView seed32) {
  PORCHAIN_ENFORCE(seed32.size() == crypto_sign_SEEDBYTES, ParameterError,
                   "signature seed must be 32 bytes");
  SigKeypair kp;
  kp.signing_key.resize(crypto_sign_SECRETKEYBYTES);
  kp.verify_key.resize(crypto_sign_PUBLICKEYBYTES);
  crypto_sign_seed_keypair(kp.verify_key.data(), kp.signing_key.data(), seed32.data());
  return kp;
}

SigKeypair SigKeypair::generate(XofSampler& rng) { return from_seed(rng.bytes32()); }

Bytes sign(ByteView msg, const SigKeypair& key) {
  PORCHAIN_ENFORCE(key.signing_key.size() == crypto_sign_SECRETKEYBYTES, ParameterError,
                   "malformed signing key");
  Bytes sig(crypto_sign_BYTES);
  crypto_sign_detached(sig.data(), nullptr, msg.data(), msg.size(), key.signing_key.data());
  return sig;
}

bool sig_verify(ByteView msg, ByteView sig, ByteView verify_key) {
  if (sig.size() != crypto_sign_BYTES || verify_key.size() != crypto_sign_PUBLICKEYBYTES)
    return false;
  return crypto_sign_verify_detached(sig.data(), msg.data(), msg.size(), verify_key.data()) == 0;
}

}  // namespace porchain::crypto
