#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace closedlab::detail {

inline unsigned effective_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Static block partition of [0, n). Each worker gets one contiguous chunk;
/// callers merge per-chunk results in chunk order, so output never depends
/// on the number of threads.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned jobs, Fn&& fn) {
    jobs = effective_jobs(jobs);
    if (n == 0) return;
    if (jobs <= 1 || n == 1) {
        fn(0u, std::size_t{0}, n);
        return;
    }
    std::size_t chunks = jobs < n ? jobs : n;
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    std::size_t base = n / chunks, rem = n % chunks, lo = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t hi = lo + base + (c < rem ? 1 : 0);
        threads.emplace_back([&fn, c, lo, hi] { fn(static_cast<unsigned>(c), lo, hi); });
        lo = hi;
    }
    for (auto& t : threads) t.join();
}

}  // namespace closedlab::detail
