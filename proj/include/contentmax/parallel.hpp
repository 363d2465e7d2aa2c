#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace contentmax {

/// Worker count from CONTENTMAX_THREADS (a positive integer); 1 when unset
/// or malformed.
std::size_t configured_threads();

/// Calls fn(part) once for every part in [0, parts), on up to
/// configured_threads() threads. The first exception thrown by a part is
/// rethrown after all workers have stopped. Callers keep per-part results
/// and merge them in part order, so the outcome is schedule-independent.
template <class Fn>
void run_parts(std::size_t parts, Fn&& fn) {
    const std::size_t workers = std::min(configured_threads(), parts);
    if (workers <= 1) {
        for (std::size_t p = 0; p < parts; ++p) fn(p);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t p = next++; p < parts; p = next++) {
                try {
                    fn(p);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = parts;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace contentmax
