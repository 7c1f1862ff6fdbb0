#pragma once

#include <cstddef>
#include <functional>

namespace lwf {

/// Worker count: LWF_THREADS if set to a positive integer, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for i in [0, n) across worker_count() threads. Each index is visited exactly once;
/// callers write results into index-addressed slots and reduce afterwards in index order.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lwf
