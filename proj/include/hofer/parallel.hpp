#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hofer {

// Worker cap: HOFER_FORGE_THREADS wins over hardware_concurrency.
inline unsigned thread_cap() {
    static const unsigned cap = [] {
        if (const char* env = std::getenv("HOFER_FORGE_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<unsigned>(v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? hw : 1u;
    }();
    return cap;
}

// Chunked parallel loop over [0, n). `fn(i)` must only write to slot i
// (or otherwise be race-free); results are deterministic regardless of
// the thread count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = std::min<std::size_t>(thread_cap(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hofer
