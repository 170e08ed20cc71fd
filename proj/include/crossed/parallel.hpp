#pragma once

#include <cstddef>
#include <functional>

namespace crossed {

/// Number of workers: min(hardware, CROSSED_KERNEL_THREADS). At least 1.
unsigned worker_count();

/// Runs fn(0..n-1) across the worker pool. fn must only touch its own index
/// slot of any shared output. Falls back to a plain loop with one worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace crossed
