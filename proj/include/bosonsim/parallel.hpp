// Copyright 2026 The bosonsim authors
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

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace bosonsim {

inline unsigned default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count) across up to `threads` workers with static
/// partitioning. Each index is processed exactly once and workers share no
/// state, so callers that write per-index slots get results independent of
/// the worker count.
inline void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)> &fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    unsigned workers = threads > count ? static_cast<unsigned>(count) : threads;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; w++) {
        pool.emplace_back([&, w]() {
            size_t begin = count * w / workers;
            size_t end = count * (w + 1) / workers;
            try {
                for (size_t i = begin; i < end; i++) {
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
}

}  // namespace bosonsim
