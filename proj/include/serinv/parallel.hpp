#pragma once
// Minimal deterministic parallel-for. The thread budget comes from
// SERIES_INVERT_THREADS (0 or unset = hardware concurrency); results are
// written into caller-indexed slots, so the aggregation order never depends
// on scheduling.

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace serinv {

inline int thread_budget() {
    if (const char* env = std::getenv("SERIES_INVERT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// fn(i) for i in [0, n); fn must only touch state owned by index i.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    int workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += workers)
                    fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace serinv
