#pragma once

// Deterministic chunked parallelism for pure per-index maps and scans.
// Worker count is capped by the HAMMING_KFREE_THREADS environment variable.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hkfree {

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("HAMMING_KFREE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = (unsigned)v;
    }
    return hw;
}

// Splits [0, total) into contiguous chunks, runs fn(chunk_index, begin, end)
// on workers, and joins. Results must be written to per-chunk slots so the
// merge is order-independent.
inline void parallel_chunks(std::uint64_t total,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    unsigned workers = worker_count();
    if (total < 4096 || workers <= 1) {
        fn(0, 0, total);
        return;
    }
    if (workers > total) workers = (unsigned)total;
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned c = 0; c < workers; ++c) {
        std::uint64_t lo = c * chunk;
        std::uint64_t hi = lo + chunk < total ? lo + chunk : total;
        if (lo >= hi) break;
        pool.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace hkfree
