#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace projclose {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(task) for task in [0, count) on up to `threads` workers.
/// Tasks must write to disjoint state; results must not depend on order.
template <typename Fn>
void parallel_tasks(std::size_t count, int threads, Fn&& fn) {
    if (count == 0) return;
    std::size_t workers = static_cast<std::size_t>(threads > 1 ? threads : 1);
    if (workers > count) workers = count;
    if (workers <= 1) {
        for (std::size_t t = 0; t < count; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            // Static striping keeps the task->worker map deterministic.
            for (std::size_t t = w; t < count; t += workers) fn(t);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace projclose
