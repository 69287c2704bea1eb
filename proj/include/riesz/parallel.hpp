#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace riesz {

// Worker count: min(hardware_concurrency, RIESZ_THREADS if set).
int thread_budget();

// Evaluates fn(i) for i in [0, count) across threads, each index writing
// its own slot.  Results are index-ordered, so downstream reductions are
// independent of scheduling.
void parallel_fill(std::size_t count, const std::function<double(std::size_t)>& fn,
                   std::vector<double>& out);

// Pairwise (cascade) summation over a fixed index order: bitwise
// deterministic for a given input vector regardless of thread count.
double pairwise_sum(const std::vector<double>& xs);

} // namespace riesz
