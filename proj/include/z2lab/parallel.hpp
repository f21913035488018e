#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace z2lab {

// Thread budget: Z2LAB_THREADS if set (clamped to [1, 64]), else the
// hardware count capped at 8.
inline int max_threads() {
    static const int cached = [] {
        if (const char* env = std::getenv("Z2LAB_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<int>(v > 64 ? 64 : v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        return static_cast<int>(hw > 8 ? 8 : hw);
    }();
    return cached;
}

// Runs fn(i) for i in [0, n).  Work items must write results into
// index-addressed storage; the schedule is dynamic but any reduction the
// caller performs afterwards over indices is order-independent, so results
// do not depend on the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const int nthreads = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(max_threads())));
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load() && first_error) std::rethrow_exception(first_error);
}

}  // namespace z2lab
