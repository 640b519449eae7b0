#pragma once

#include <cstddef>
#include <functional>

namespace polyh {

/// Worker count: POLYH_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n). Iterations must be independent; each writes
/// only its own slot, so results match sequential execution bit for bit.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace polyh
