#pragma once

#include <cstddef>
#include <functional>

namespace ospcent {

// Worker count used by internal parallel loops. Resolution order:
// set_thread_count() override, then the OSPCENT_THREADS environment
// variable, then hardware_concurrency capped at 8.
std::size_t thread_count();
void set_thread_count(std::size_t n);  // 0 restores the default

// Runs fn(begin, end) over a static contiguous partition of [0, n).
// Every element is computed independently of the partition, so results
// are bit-identical to a serial run for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace ospcent
