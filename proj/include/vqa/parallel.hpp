#pragma once

#include <cstddef>
#include <functional>

namespace vqa {

/// Worker count: VQA_THREADS if set to a positive integer, else hardware concurrency.
int default_threads();

/// Runs fn(i) for i in [0, n) on up to `threads` workers (<= 0 means default_threads()).
/// Callers write results into pre-sized slots so assembly order never depends on
/// scheduling. The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

}  // namespace vqa
