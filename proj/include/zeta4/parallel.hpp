#pragma once
// Minimal deterministic parallel map: results are stored by index, so the
// output never depends on the worker count or scheduling order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace zeta4 {

/// Number of workers used when a caller passes jobs == 0.
unsigned default_jobs();

template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out(count);
    if (jobs == 0) jobs = default_jobs();
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    // every index below a failing one is still dispensed and evaluated, so the
    // lowest failing index (the one rethrown) is independent of scheduling
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
                std::size_t cur = next.load();
                while (cur < count && !next.compare_exchange_weak(cur, count)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace zeta4
