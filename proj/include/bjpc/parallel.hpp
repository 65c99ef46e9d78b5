#ifndef BJPC_PARALLEL_HPP
#define BJPC_PARALLEL_HPP

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace bjpc {

// Runs fn(r) for r in [0, n) across contiguous chunks on up to `threads`
// workers. Callers write results into per-index slots and reduce serially, so
// the outcome does not depend on the thread count.
inline void parallel_for(long n, const std::function<void(long)>& fn, unsigned threads = 0) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || n < 64) {
        for (long r = 0; r < n; ++r) fn(r);
        return;
    }
    threads = std::min<unsigned>(threads, 16);
    const long chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const long lo = t * chunk;
        const long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] {
            for (long r = lo; r < hi; ++r) fn(r);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace bjpc

#endif  // BJPC_PARALLEL_HPP
