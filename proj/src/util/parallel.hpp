// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ami::util {

/// Runs fn(i) for i in [0, count) on up to max_concurrency threads.
/// Result placement is the caller's concern (index-addressed slots), so output
/// order never depends on completion order. The first exception thrown by any
/// task is rethrown after all threads join.
template <typename Fn>
void parallel_for(size_t count, int max_concurrency, Fn&& fn) {
    if (count == 0) return;
    size_t workers = static_cast<size_t>(max_concurrency < 1 ? 1 : max_concurrency);
    if (workers > count) workers = count;
    if (workers == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ami::util
