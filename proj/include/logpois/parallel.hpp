#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace logpois {

/* Run fn(i) for i in [0, count) on up to `jobs` threads. Work items are
 * independent; callers collect results into preallocated slots indexed by
 * i, so the output is identical for every job count. */
inline void run_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    std::size_t threads = std::min<std::size_t>(std::size_t(jobs), count);
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace logpois
