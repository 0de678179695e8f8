#pragma once

#include <cstdint>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cvsim {

/// Fixed work-chunk size for the parallel kernels. Chunk boundaries depend
/// only on the problem size, so per-chunk results (and any merge done in
/// chunk order) are reproducible for every thread count.
inline constexpr int64_t kChunkSize = 4096;

inline int64_t chunk_count(int64_t n) {
    return (n + kChunkSize - 1) / kChunkSize;
}

/// Calls fn(chunk_index, begin, end) for each chunk of [0, n), in parallel.
template <class Fn>
void for_each_chunk(int64_t n, Fn&& fn) {
    const int64_t chunks = chunk_count(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int64_t c = 0; c < chunks; ++c) {
        const int64_t begin = c * kChunkSize;
        const int64_t end = begin + kChunkSize < n ? begin + kChunkSize : n;
        fn(c, begin, end);
    }
}

/// Serial reference with the same chunk layout.
template <class Fn>
void for_each_chunk_serial(int64_t n, Fn&& fn) {
    const int64_t chunks = chunk_count(n);
    for (int64_t c = 0; c < chunks; ++c) {
        const int64_t begin = c * kChunkSize;
        const int64_t end = begin + kChunkSize < n ? begin + kChunkSize : n;
        fn(c, begin, end);
    }
}

}  // namespace cvsim
