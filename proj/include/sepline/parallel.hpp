#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace sepline {

/// Runs f(begin, end) over [0, n) split into at most `threads` chunks.
/// With threads <= 1 the call is inline; chunk boundaries are deterministic.
template <class F>
void parallel_chunks(int n, int threads, F&& f) {
    if (n <= 0) return;
    threads = std::clamp(threads, 1, n);
    if (threads == 1) {
        f(0, n);
        return;
    }
    int chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        int b = t * chunk;
        int e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&f, b, e] { f(b, e); });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace sepline
