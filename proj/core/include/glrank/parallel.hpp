#pragma once

#include <cstddef>
#include <functional>

namespace glrank {

/// Worker count: GLRANK_THREADS when set to a positive integer, else hardware concurrency.
std::size_t worker_count();

/// Calls body(i) for i in [0, n) on up to worker_count() threads. Callers write results
/// into slot i, so output never depends on scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace glrank
