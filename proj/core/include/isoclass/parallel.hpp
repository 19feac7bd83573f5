#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace isoclass {

// Worker budget handed down from the driver. Modules never spawn more
// threads than this.
struct Parallelism
{
    unsigned threads = 1;
};

// Calls body(i) for every i in [0, n). Indices are claimed dynamically, so
// callers that need reproducible output must write into slot i and reduce
// the slots in index order afterwards.
template <class Body>
void parallel_for(std::size_t n, Parallelism par, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1u, par.threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n, std::memory_order_relaxed);
                return;
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

// Maps every index through fn in parallel and returns the results in index
// order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Parallelism par, Fn&& fn)
{
    std::vector<T> out(n);
    parallel_for(n, par, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

} // namespace isoclass
