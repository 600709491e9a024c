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

#include <stdexcept>
#include <string>

namespace porchain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition (l > n, s = 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Bytes could not be decoded into the expected canonical form.
class FormatError : public Error {
 public:
  using Error::Error;
};

// An off-chain protocol step was invoked in the wrong state.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

#define PORCHAIN_ENFORCE(cond, ErrorType, msg) \
  do {                                         \
    if (!(cond)) throw ErrorType(msg);         \
  } while (0)

}  // namespace porchain
