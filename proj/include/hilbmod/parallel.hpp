#pragma once

#include <cstddef>
#include <functional>

namespace hilbmod {

// Runs fn(i) for i in [0, count) on up to HILBMOD_THREADS threads (default:
// hardware concurrency). Falls back to a serial loop for small counts.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

int thread_budget();

}  // namespace hilbmod
