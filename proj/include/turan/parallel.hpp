#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace turan {

inline int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

/// Runs f(i) for i in [0, count) across `jobs` workers, stealing indices
/// from a shared counter.  Callers write results into index-addressed slots
/// so the outcome is independent of scheduling.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<std::size_t>(std::size_t(jobs), count) - 1;
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

} // namespace turan
