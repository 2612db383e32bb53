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

#ifndef KUNI_CONSTRUCTIONS_H
#define KUNI_CONSTRUCTIONS_H

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kuni/decomposition.h"
#include "kuni/linear_code.h"
#include "kuni/sparse_state.h"

namespace kuni {

/// Equal-weight superposition of all q^k codewords.
/// Errors: TooLarge (q^k above 10^7 or the term cap).
SparseState state_from_code(const LinearCode &code);

/// The q^n states M(v) |seed>, v in [q]^n in lexicographic order, with M(v)
/// in the standard layout (Z on the first k sites). Materialized on demand.
class WeylBasis {
   public:
    WeylBasis(SparseState seed, size_t z_block);

    uint64_t size() const {
        return size_;
    }
    std::vector<uint32_t> word(uint64_t index) const;
    SparseState at(uint64_t index) const;

   private:
    SparseState seed_;
    size_t z_block_;
    uint64_t size_;
};

/// Z-block length of a minimal-support seed: log_q(support).
/// Errors: SizeMismatch when the support is not a power of q.
size_t seed_z_block(const SparseState &seed);

enum class ClqVariant { Direct, Dual };

/// sum_v |vG'> (x) M(v)|seed>, G' the code (Direct) or its dual (Dual).
/// Errors: SizeMismatch (seed parties != dimension of the classical code), TooLarge.
SparseState cl_plus_q(const LinearCode &code, const SparseState &seed, ClqVariant variant = ClqVariant::Direct,
                      std::optional<size_t> seed_z_block = std::nullopt);

/// X^l (x) Z^m sum_r |r, r>.
SparseState bell_state(const FieldPtr &spec, uint32_t l, uint32_t m);

/// sum_v |vG> (x) |psi_{vQ}> with |psi_{(a,b)}> = X^a (x) Z^b sum_l |l, l>.
/// Errors: TooLarge (checked first), CertificationMissing.
SparseState cl_plus_q_repetition(const FFMatrix &g, const QMatrix &q);

SparseState ghz_state(const FieldPtr &spec, size_t n);

/// sum_{l,m} |l, m, l+m> (x) X^l (x) Z^m sum_r |r, r>.
SparseState ame_5_q(const FieldPtr &spec);

/// sum_{i,j,l} |i, j, l, i+j+l, i+xj+(1+x)l> (x) |phi_{(i+j, i+xl)}> over GF(4).
SparseState ame_7_4();

/// The hard-coded GF(17) and GF(19) generator and Q matrices.
GQPair ame_19_17_matrices();
GQPair ame_21_19_matrices();

struct BuiltinRequest {
    std::string name;
    uint32_t q = 0;
    size_t n = 0;
    uint32_t l = 0;
    uint32_t m = 0;
};

/// Errors: UnknownName, OutOfRange, UnsupportedSize.
std::variant<SparseState, GQPair> builtin_state(const BuiltinRequest &request);

std::vector<std::string> builtin_names();

}  // namespace kuni

#endif
