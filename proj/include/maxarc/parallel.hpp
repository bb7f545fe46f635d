#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace maxarc {

/// Worker count for data-parallel loops; MAXARC_THREADS overrides.
inline unsigned worker_count() {
    if (const char* env = std::getenv("MAXARC_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(chunk, begin, end) over a partition of [0, n) into contiguous
/// chunks. Chunks are merged by the caller in chunk order, so results stay
/// deterministic regardless of scheduling.
template <typename Fn>
void parallel_chunks(std::size_t n, std::size_t grain, Fn&& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n <= grain) {
        fn(0u, std::size_t{0}, n);
        return;
    }
    unsigned chunks = workers;
    std::size_t step = (n + chunks - 1) / chunks;
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (unsigned c = 0; c < chunks; ++c) {
        std::size_t b = c * step, e = std::min(n, b + step);
        if (b >= e) break;
        threads.emplace_back([&fn, c, b, e] { fn(c, b, e); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace maxarc
