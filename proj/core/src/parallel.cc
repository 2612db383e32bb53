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

#include "kuni/parallel.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kuni {

namespace {
std::atomic<unsigned> g_threads{0};
// Nested calls run inline on the worker that issued them.
thread_local bool t_inside = false;
}

void set_default_threads(unsigned threads) {
    g_threads.store(threads);
}

unsigned default_threads() {
    unsigned t = g_threads.load();
    if (t == 0) {
        t = std::max(1u, std::thread::hardware_concurrency());
    }
    return t;
}

void parallel_for(size_t count, const std::function<void(size_t, size_t)> &body) {
    if (count == 0) {
        return;
    }
    size_t workers = std::min<size_t>(default_threads(), count);
    if (workers <= 1 || t_inside) {
        body(0, count);
        return;
    }
    size_t chunk = std::max<size_t>(1, count / (workers * 8));
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&]() {
        struct Mark {
            bool outer = t_inside;
            Mark() {
                t_inside = true;
            }
            ~Mark() {
                t_inside = outer;
            }
        } mark;
        while (!failed.load()) {
            size_t begin = next.fetch_add(chunk);
            if (begin >= count) {
                return;
            }
            size_t end = std::min(count, begin + chunk);
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed.store(true);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (size_t w = 1; w < workers; w++) {
        pool.emplace_back(run);
    }
    run();
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace kuni
