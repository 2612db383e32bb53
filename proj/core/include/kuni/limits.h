// Copyright 2026 The kuni Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KUNI_LIMITS_H
#define KUNI_LIMITS_H

#include <cstddef>
#include <cstdint>

namespace kuni {

/// Largest field order accepted by make_field.
inline constexpr uint64_t kMaxFieldOrder = uint64_t{1} << 16;

/// Codeword enumeration cap (q^k).
inline constexpr uint64_t kMaxCodewords = 100'000'000;

/// Cap on determinant / rank checks performed by a single MDS certification.
inline constexpr uint64_t kMaxDeterminants = 10'000'000;

/// Default cap on the number of terms a materialized state may hold.
inline constexpr uint64_t kDefaultMaxTerms = 10'000'000;

/// Hard ceiling for KUNI_MAX_TERMS.
inline constexpr uint64_t kHardMaxTerms = 50'000'000;

/// Largest reduced density matrix dimension q^|S|.
inline constexpr uint64_t kMaxReducedDim = 4096;

/// Term cap in force: KUNI_MAX_TERMS when set (clamped to kHardMaxTerms),
/// otherwise kDefaultMaxTerms.
uint64_t max_terms();

/// Saturating product, returns UINT64_MAX on overflow.
uint64_t checked_mul(uint64_t a, uint64_t b);
uint64_t checked_pow(uint64_t base, uint64_t exponent);
uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace kuni

#endif
