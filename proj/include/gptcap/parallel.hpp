#ifndef GPTCAP_PARALLEL_HPP
#define GPTCAP_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace gptcap {

// Worker count: GPTCAP_THREADS when set, else hardware concurrency capped at 8.
inline unsigned worker_count() {
    if (const char* env = std::getenv("GPTCAP_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return hw > 8 ? 8 : hw;
}

// Runs f(i) for i in [0, n) across worker threads in fixed stripes. Callers
// write per-index results into preallocated slots and reduce in index order
// afterwards, so outcomes never depend on scheduling.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    unsigned workers = worker_count();
    if (n < 2 || workers < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace gptcap

#endif
