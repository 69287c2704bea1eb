#include "riesz/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace riesz {

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("RIESZ_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_fill(std::size_t count, const std::function<double(std::size_t)>& fn,
                   std::vector<double>& out) {
    out.resize(count);
    int workers = thread_budget();
    if (workers <= 1 || count < 1024) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::size_t chunk = (count + static_cast<std::size_t>(workers) - 1) /
                        static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

namespace {

double pairwise_range(const std::vector<double>& xs, std::size_t lo, std::size_t hi) {
    std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += xs[i];
        return s;
    }
    std::size_t mid = lo + n / 2;
    return pairwise_range(xs, lo, mid) + pairwise_range(xs, mid, hi);
}

} // namespace

double pairwise_sum(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    return pairwise_range(xs, 0, xs.size());
}

} // namespace riesz
