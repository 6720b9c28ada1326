#pragma once

#include <functional>
#include <span>

namespace linkhel {

/// Worker count for internal loops: LINKHEL_THREADS when set and positive,
/// otherwise the hardware concurrency.
int thread_count();

/// Overrides LINKHEL_THREADS for the current process; 0 restores the default.
void set_thread_count(int n);

/// Runs body(lo, hi) over disjoint contiguous chunks of [begin, end).
/// Bodies must only write to locations owned by their own chunk.
void parallel_for(int begin, int end, const std::function<void(int, int)>& body);

/// Sum in a fixed pairwise tree, independent of thread count.
double pairwise_sum(std::span<const double> values);

}  // namespace linkhel
