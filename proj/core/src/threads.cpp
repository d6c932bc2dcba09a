#include "galbrun/threads.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace galbrun {

int thread_cap() {
    static const int cap = [] {
        const char* env = std::getenv("GALBRUN_THREADS");
        if (!env) return 1;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) return 1;
        return static_cast<int>(v);
    }();
    return cap;
}

void parallel_rows(int rows, const std::function<void(int)>& fn) {
    const int nthreads = std::min(thread_cap(), rows);
    if (nthreads <= 1) {
        for (int j = 0; j < rows; ++j) fn(j);
        return;
    }
    // Contiguous chunks; chunk boundaries depend on nthreads but row-internal
    // work does not, so results are identical for any thread count.
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const int base = rows / nthreads, extra = rows % nthreads;
    int start = 0;
    for (int t = 0; t < nthreads; ++t) {
        const int len = base + (t < extra ? 1 : 0);
        pool.emplace_back([&fn, start, len] {
            for (int j = start; j < start + len; ++j) fn(j);
        });
        start += len;
    }
    for (auto& th : pool) th.join();
}

} // namespace galbrun
