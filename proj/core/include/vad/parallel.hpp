#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace vad {

/// Caps worker parallelism process-wide (CLI --threads). 0 restores the
/// hardware default.
void set_thread_count(int n);
int thread_count();

/// Runs fn(begin, end) over a contiguous partition of [0, n) across the worker
/// pool. Each invocation sees a disjoint range; blocking until all complete.
void parallel_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

/// Element-wise parallel loop.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    parallel_ranges(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) f(i);
    });
}

/// Serial in-order sum of a per-item value array; pair with parallel_for
/// writing per-item partials so totals do not depend on the thread count.
double ordered_sum(const std::vector<double>& items);

} // namespace vad
