#pragma once

#include <cstdint>
#include <functional>

namespace ahe {

/** Number of worker threads used by the heavy kernels (block solves, FFT
 * batches, stencil sweeps). Defaults to the hardware concurrency. */
int thread_count();

/** Set the worker thread count (clamped to >= 1). Results are bitwise
 * independent of this setting for all elementwise kernels; reductions are
 * always evaluated sequentially. */
void set_thread_count(int n);

namespace detail {

/** Run fn(begin, end) over contiguous chunks of [begin, end), one chunk per
 * worker. Chunks are disjoint, so writes to distinct indices race-free. */
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

} // namespace detail
} // namespace ahe
