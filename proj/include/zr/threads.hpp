#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace zr {

// Worker count: min(hardware, ZR_THREADS) with ZR_THREADS > 0; 1 if unset to 0.
unsigned thread_count();

// Runs fn(i) for i in [0, n) across workers.  Each index is handled exactly
// once and results must be written to disjoint slots, so the outcome is
// independent of scheduling.  Exceptions are rethrown for the smallest
// failing index.
void parallel_for_indexed(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace zr
