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

#ifndef KUNI_COMBINATORICS_H
#define KUNI_COMBINATORICS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace kuni {

/// Advances a sorted k-subset of [0, n) to its lexicographic successor.
/// Returns false (leaving the subset unspecified) after the last one.
bool next_combination(std::vector<size_t> &subset, size_t n);

/// The index-th k-subset of [0, n) in lexicographic order.
std::vector<size_t> unrank_combination(size_t n, size_t k, uint64_t index);

/// Visits every k-subset of [0, n) in lexicographic order, in parallel
/// chunks. `check` returns false on a failing subset. The result is the
/// lexicographically first failing subset index, or nullopt when every
/// subset passes. Chunks past a known failure stop early.
std::optional<uint64_t> find_first_failing_subset(size_t n, size_t k,
                                                  const std::function<bool(const std::vector<size_t> &)> &check);

}  // namespace kuni

#endif
