#pragma once

#include <cstddef>
#include <functional>

namespace tsc {

/// Global cap on worker threads used by ensemble training. 0 means "use the
/// hardware concurrency". Defaults to 1.
void set_max_threads(std::size_t n) noexcept;
std::size_t max_threads() noexcept;

/// Runs body(i) for i in [0, n). Each index is executed exactly once; the
/// first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tsc
