#pragma once

#include <functional>

namespace whitham {

// Thread cap: WHITHAM_MI_THREADS if set (>= 1), otherwise hardware concurrency.
int max_threads();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks, one per
// thread; results must be written to per-index slots so the outcome is
// deterministic regardless of the thread count.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace whitham
