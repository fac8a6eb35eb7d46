#pragma once

#include <cstddef>
#include <functional>

namespace qcpg {

// Worker count: QCPG_KIT_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. The first
// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qcpg
