#include "ahe/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ahe {

namespace {
std::atomic<int> g_threads{0}; // 0 = not set yet
}

int thread_count() {
    int n = g_threads.load(std::memory_order_relaxed);
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
    }
    return n;
}

void set_thread_count(int n) {
    g_threads.store(std::max(1, n), std::memory_order_relaxed);
}

namespace detail {

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& fn) {
    const std::int64_t total = end - begin;
    if (total <= 0) return;

    const int workers = static_cast<int>(
        std::min<std::int64_t>(thread_count(), total));
    if (workers <= 1) {
        fn(begin, end);
        return;
    }

    // Fixed contiguous partition: chunk boundaries depend only on the range
    // and the worker count, never on scheduling.
    const std::int64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) {
        std::int64_t lo = begin + w * chunk;
        std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    fn(begin, std::min(end, begin + chunk));
    for (auto& t : pool) t.join();
}

} // namespace detail
} // namespace ahe
