#pragma once

#include <cstddef>
#include <functional>

namespace geohom {

/// Worker count: GEOHOM_THREADS when set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Calls body(i) for every i in [0, count) across worker_count() threads. Each index runs exactly
/// once; results are deterministic as long as body writes only to slot i. The first exception
/// thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace geohom
