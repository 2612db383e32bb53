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

#ifndef KUNI_PARALLEL_H
#define KUNI_PARALLEL_H

#include <cstddef>
#include <functional>

namespace kuni {

/// Thread cap used by the parallel sweeps (subset checks, Q search,
/// uniformity). 0 restores the hardware default.
void set_default_threads(unsigned threads);
unsigned default_threads();

/// Runs body(begin, end) over disjoint chunks covering [0, count). Chunks are
/// handed out dynamically; the first exception thrown by any worker is
/// rethrown on the calling thread after all workers stop.
void parallel_for(size_t count, const std::function<void(size_t begin, size_t end)> &body);

}  // namespace kuni

#endif
