#pragma once

#include <cstdint>

#ifdef DESCARTES_HAVE_OPENMP
#include <omp.h>
#endif

namespace descartes {

enum class Execution { Serial, Parallel };

inline int worker_count() {
#ifdef DESCARTES_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_worker_count(int n) {
#ifdef DESCARTES_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

/// splitmix64 of (base, index): independent per-item RNG seeds, so results
/// do not depend on how items are scheduled across threads.
inline std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace descartes
