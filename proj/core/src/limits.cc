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

#include "kuni/limits.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace kuni {

uint64_t max_terms() {
    const char *env = std::getenv("KUNI_MAX_TERMS");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxTerms;
    }
    char *end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || parsed == 0) {
        return kDefaultMaxTerms;
    }
    return std::min<uint64_t>(parsed, kHardMaxTerms);
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
        return std::numeric_limits<uint64_t>::max();
    }
    return a * b;
}

uint64_t checked_pow(uint64_t base, uint64_t exponent) {
    uint64_t result = 1;
    for (uint64_t i = 0; i < exponent; i++) {
        result = checked_mul(result, base);
    }
    return result;
}

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    uint64_t result = 1;
    for (uint64_t i = 1; i <= k; i++) {
        // result * (n - k + i) / i stays integral at every step.
        uint64_t num = n - k + i;
        if (result > std::numeric_limits<uint64_t>::max() / num) {
            return std::numeric_limits<uint64_t>::max();
        }
        result = result * num / i;
    }
    return result;
}

}  // namespace kuni
