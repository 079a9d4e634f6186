#pragma once

// Deterministic fork-join helper. Work is split into contiguous index chunks,
// each index handled by exactly one worker, so results are identical for any
// thread count. Nested calls run serially to avoid oversubscription.
// WEATHERFLOW_THREADS caps the pool.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace wf {

inline int max_threads() {
    static const int cached = [] {
        int n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
        if (const char* env = std::getenv("WEATHERFLOW_THREADS")) {
            const int cap = std::atoi(env);
            if (cap > 0) n = std::min(n, cap);
        }
        return n;
    }();
    return cached;
}

namespace detail {
inline thread_local bool in_parallel_region = false;
}

// fn(i) for i in [0, n). fn must only write to i-specific locations.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn, int threads = 0) {
    if (n <= 0) return;
    if (threads <= 0) threads = max_threads();
    threads = static_cast<int>(std::min<std::int64_t>(threads, n));
    if (threads <= 1 || detail::in_parallel_region) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    const std::int64_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t lo = t * chunk;
        const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            detail::in_parallel_region = true;
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
            detail::in_parallel_region = false;
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace wf
