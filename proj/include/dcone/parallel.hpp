#pragma once

#include <cstddef>
#include <functional>

namespace dcone {

/// Worker count from DCONE_THREADS, else the hardware concurrency (>= 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() threads. Each
/// index is processed exactly once; callers write to slot i only, so the
/// result never depends on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace dcone
