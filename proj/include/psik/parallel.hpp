#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace psik {

inline unsigned effective_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Run fn(i) for i in [0, count) across `workers` threads and collect the
/// per-index results in index order, so output is identical for any worker
/// count. fn must be safe to call concurrently for distinct i.
template <class R>
std::vector<R> parallel_index_map(std::size_t count, unsigned workers,
                                  const std::function<R(std::size_t)>& fn) {
    std::vector<R> results(count);
    if (count == 0) return results;
    unsigned nthreads = std::min<std::size_t>(effective_workers(workers), count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || failed.load(std::memory_order_relaxed)) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (failed) std::rethrow_exception(failure);
    return results;
}

} // namespace psik
