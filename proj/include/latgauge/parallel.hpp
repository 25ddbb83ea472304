#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace latgauge {

inline int thread_cap() {
    if (const char* s = std::getenv("LATGAUGE_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) {
            return v;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, n), possibly on several workers. Each index must
/// write only to its own output slot; results are identical at any thread
/// count because all per-index state (including RNG streams) is derived from
/// the index.
inline void parallel_for_indexed(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(n, thread_cap());
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += workers) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace latgauge
