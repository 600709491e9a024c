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

// Test-side reference arithmetic. Everything here is computed with GMP on
// plain integers so that it shares no code with the library's field and
// group implementation.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "porchain/crypto/scalar.hpp"

namespace porchain::testing {

inline const mpz_class& group_order() {
  static const mpz_class p("73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 16);
  return p;
}

inline mpz_class to_mpz(const crypto::Scalar& s) {
  auto b = s.to_bytes();
  mpz_class z;
  mpz_import(z.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  return z;
}

inline mpz_class mod_p(const mpz_class& v) {
  mpz_class r = v % group_order();
  if (r < 0) r += group_order();
  return r;
}

// Solves A x = b over Z_p by Gauss-Jordan elimination. Returns nullopt if A
// is singular.
inline std::optional<std::vector<mpz_class>> solve_mod_p(std::vector<std::vector<mpz_class>> a,
                                                         std::vector<mpz_class> b) {
  const mpz_class& p = group_order();
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && mod_p(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(mod_p(a[col][col])).get_mpz_t(), p.get_mpz_t());
    for (size_t k = 0; k < n; ++k) a[col][k] = mod_p(a[col][k] * inv);
    b[col] = mod_p(b[col] * inv);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || mod_p(a[row][col]) == 0) continue;
      mpz_class f = a[row][col];
      for (size_t k = 0; k < n; ++k) a[row][k] = mod_p(a[row][k] - f * a[col][k]);
      b[row] = mod_p(b[row] - f * b[col]);
    }
  }
  return b;
}

}  // namespace porchain::testing
