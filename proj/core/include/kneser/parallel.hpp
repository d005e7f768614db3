#pragma once

#include <thread>
#include <vector>

namespace kneser {

// Runs f(i) for i in [0, n) on `jobs` threads. Results must be written to
// pre-sized per-index slots so the outcome is identical for any job count.
template <typename F>
void parallel_for(int n, int jobs, F&& f) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || n <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    int per = (n + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        int lo = w * per, hi = std::min(n, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (int i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace kneser
