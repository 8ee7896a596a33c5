#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace groverian {

inline int thread_count()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Runs body(i) for i in [0, count). Iterations must be independent; any
// reduction done by the caller has to be order-insensitive so results do
// not depend on the schedule.
template <typename Body>
inline void parallel_for(std::int64_t count, Body&& body)
{
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
        body(i);
#else
    for (std::int64_t i = 0; i < count; ++i)
        body(i);
#endif
}

} // namespace groverian
