#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace coprime {

/// Worker cap: COPRIME_JITTER_THREADS if set (minimum 1), else the hardware
/// concurrency.
int max_threads();

/// Runs f(i) for i in [0, n) on up to max_threads() workers. Each index owns
/// its own result slot in the caller, so the outcome is identical to the
/// serial loop regardless of the thread count.
template <typename F>
void parallel_for(std::int64_t n, F&& f) {
    const int workers = std::min<std::int64_t>(max_threads(), n);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&f, n, w, workers] {
            for (std::int64_t i = w; i < n; i += workers) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace coprime
