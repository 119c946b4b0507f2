#pragma once

#include <cstddef>
#include <functional>

namespace ratlrc {

/// Worker count: LRC_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on up to
/// worker_count() threads. Exceptions from any chunk are rethrown after all
/// workers join. Callers write results into per-index slots so output stays
/// deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace ratlrc
