#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lingomotion {

// All parallel kernels in this library write to disjoint output slots and
// reduce in a fixed index order, so results are bit-identical between the
// serial and parallel policies and independent of the thread count.
enum class RunPolicy { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

template <typename F>
void parallel_for(std::int64_t n, RunPolicy policy, F&& body) {
#ifdef _OPENMP
    if (policy == RunPolicy::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)policy;
#endif
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace lingomotion
