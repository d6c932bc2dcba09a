#pragma once

#include <functional>

namespace galbrun {

// Worker cap for row-parallel kernels, read once from GALBRUN_THREADS
// (positive integer; absent or invalid -> 1).
int thread_cap();

// Runs fn(j) for j in [0, rows), chunked over at most thread_cap() threads.
// Each row is processed by exactly one thread, so kernels that write only to
// row j and reductions that store per-row partials are deterministic for any
// thread count.
void parallel_rows(int rows, const std::function<void(int)>& fn);

} // namespace galbrun
