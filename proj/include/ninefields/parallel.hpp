// Deterministic worker pool: tasks are indexed, results are merged in index
// order, so output never depends on scheduling.
#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ninefields {

inline int default_workers() {
    if (const char* env = std::getenv("NINEFIELDS_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

// apply fn to 0..n-1, collecting results by index
template <typename R>
std::vector<R> parallel_map(size_t n, const std::function<R(size_t)>& fn, int workers = 0) {
    if (workers <= 0) workers = default_workers();
    std::vector<R> out(n);
    if (workers == 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    auto run = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nw = std::min<size_t>(workers, n);
    for (int i = 0; i < nw; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    return out;
}

} // namespace ninefields
