#pragma once

#include <cstddef>
#include <functional>

namespace forumlens {

/// Worker count: FORUMLENS_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count() noexcept;

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
/// runs exactly once; the first exception thrown is rethrown after all
/// workers stop. Results must be written to per-index slots by the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace forumlens
