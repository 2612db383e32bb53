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

#include "kuni/combinatorics.h"

#include <atomic>
#include <limits>

#include "kuni/limits.h"
#include "kuni/parallel.h"

namespace kuni {

bool next_combination(std::vector<size_t> &subset, size_t n) {
    size_t k = subset.size();
    size_t i = k;
    while (i > 0) {
        i--;
        if (subset[i] < n - k + i) {
            subset[i]++;
            for (size_t j = i + 1; j < k; j++) {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

std::vector<size_t> unrank_combination(size_t n, size_t k, uint64_t index) {
    std::vector<size_t> out;
    out.reserve(k);
    size_t next = 0;
    for (size_t slot = 0; slot < k; slot++) {
        for (size_t v = next; v < n; v++) {
            // Number of subsets that start with v at this slot.
            uint64_t count = binomial(n - v - 1, k - slot - 1);
            if (index < count) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            index -= count;
        }
    }
    return out;
}

std::optional<uint64_t> find_first_failing_subset(size_t n, size_t k,
                                                  const std::function<bool(const std::vector<size_t> &)> &check) {
    uint64_t total = binomial(n, k);
    if (total == 0) {
        return std::nullopt;
    }
    std::atomic<uint64_t> first_failure{std::numeric_limits<uint64_t>::max()};
    parallel_for(total, [&](size_t begin, size_t end) {
        if (begin >= first_failure.load()) {
            return;
        }
        std::vector<size_t> subset = unrank_combination(n, k, begin);
        for (size_t index = begin; index < end; index++) {
            if (index >= first_failure.load()) {
                return;
            }
            if (!check(subset)) {
                uint64_t cur = first_failure.load();
                while (index < cur && !first_failure.compare_exchange_weak(cur, index)) {
                }
                return;
            }
            if (index + 1 < end) {
                next_combination(subset, n);
            }
        }
    });
    uint64_t result = first_failure.load();
    if (result == std::numeric_limits<uint64_t>::max()) {
        return std::nullopt;
    }
    return result;
}

}  // namespace kuni
