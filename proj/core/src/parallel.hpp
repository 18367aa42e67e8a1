#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gridhfk::detail {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(i) for i in [0, count) on contiguous chunks. Each index is handled
// by exactly one worker, so results written per index are deterministic. The
// first exception thrown by a worker is rethrown.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), count);
    if (workers <= 1 || count < 1024) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::exception_ptr error;
    std::mutex m;
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace gridhfk::detail
