#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace sts {

// Worker count resolution: explicit request > STS_WORKERS environment
// variable > hardware concurrency. Always at least 1.
int worker_count(int requested = 0);

// Run fn(index) for index in [0, count) across `workers` threads, pulling
// work from a shared atomic counter. fn must be safe to call concurrently
// on distinct indices. Exceptions from workers are rethrown on the caller.
void parallel_for_index(std::size_t count, int workers,
                        const std::function<void(std::size_t)>& fn);

}  // namespace sts
