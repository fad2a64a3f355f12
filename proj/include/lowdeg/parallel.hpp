#pragma once

#include <cstdint>

namespace lowdeg {

// Execution policy for the hot kernels.  Every parallel kernel has a serial
// twin with identical output; tests compare the two and the bench target
// times them.  Results are independent of thread count because parallel
// loops only ever write disjoint indices (reductions are done serially over
// a materialized per-index array).
enum class Exec { Serial, Parallel };

// Applies the LOWDEG_THREADS cap (if the variable is set) to the OpenMP
// runtime.  No-op in serial builds.
void init_threads_from_env();

int max_threads();

namespace detail {
void parallel_for_impl(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t));
}

// f(i) for i in [0, n); f must not write shared state except at index i.
template <typename F>
void parallel_for(Exec exec, std::int64_t n, F&& f) {
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
  auto thunk = [](void* ctx, std::int64_t i) { (*static_cast<F*>(ctx))(i); };
  detail::parallel_for_impl(n, &f, thunk);
}

}  // namespace lowdeg
