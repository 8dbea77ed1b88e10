#pragma once

#include <cstddef>
#include <functional>

namespace ellwall {

// Worker count: ELLWALL_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n). Each index runs exactly once; callers write
// results into per-index slots so output order never depends on scheduling.
// The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ellwall
