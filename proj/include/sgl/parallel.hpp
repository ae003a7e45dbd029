#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace sgl {

// Worker count: SGL_THREADS caps it, default hardware concurrency.
inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("SGL_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

// Splits [0, total) into contiguous chunks, runs work(chunk_index, begin, end)
// on a pool, and leaves any reduction to the caller in chunk order; results
// are schedule-independent as long as `work` only touches its own chunk slot.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int n_chunks, Fn&& work) {
    if (total == 0) return;
    if (n_chunks < 1) n_chunks = 1;
    if (static_cast<std::uint64_t>(n_chunks) > total) n_chunks = static_cast<int>(total);
    const std::uint64_t per = total / n_chunks;
    const std::uint64_t rem = total % n_chunks;
    if (n_chunks == 1) {
        work(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_chunks);
    std::uint64_t begin = 0;
    for (int c = 0; c < n_chunks; ++c) {
        const std::uint64_t len = per + (static_cast<std::uint64_t>(c) < rem ? 1 : 0);
        pool.emplace_back([&work, c, begin, len] { work(c, begin, begin + len); });
        begin += len;
    }
    for (auto& th : pool) th.join();
}

} // namespace sgl
