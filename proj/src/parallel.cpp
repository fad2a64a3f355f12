#include "lowdeg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lowdeg {

void init_threads_from_env() {
#ifdef _OPENMP
  const char* cap = std::getenv("LOWDEG_THREADS");
  if (cap == nullptr) return;
  try {
    const int n = std::stoi(cap);
    if (n >= 1) omp_set_num_threads(std::min(n, omp_get_max_threads()));
  } catch (...) {
    // Malformed value: keep the runtime default.
  }
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

void parallel_for_impl(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
#else
  for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
#endif
}

}  // namespace detail
}  // namespace lowdeg
