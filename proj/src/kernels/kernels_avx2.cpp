// AVX2 variants of the hot kernels. Only min/max/sub are used, all of which
// are exact per element, so results are bit-identical to the scalar path.

#include <immintrin.h>

#include <algorithm>
#include <cstddef>
#include <limits>

namespace quasitree::kernels {

void maximin_update_avx2(double* acc, const double* row, double cap, std::size_t n) {
    const __m256d capv = _mm256_set1_pd(cap);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_loadu_pd(row + i);
        __m256d a = _mm256_loadu_pd(acc + i);
        _mm256_storeu_pd(acc + i, _mm256_max_pd(a, _mm256_min_pd(capv, r)));
    }
    for (; i < n; ++i) acc[i] = std::max(acc[i], std::min(cap, row[i]));
}

double max_difference_avx2(const double* a, const double* b, std::size_t n) {
    __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        best = _mm256_max_pd(best, d);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < n; ++i) out = std::max(out, a[i] - b[i]);
    return out;
}

}  // namespace quasitree::kernels
