// NEON variants, mirroring kernels_avx2.cpp two lanes at a time.

#include <arm_neon.h>

#include <algorithm>
#include <cstddef>
#include <limits>

namespace quasitree::kernels {

void maximin_update_neon(double* acc, const double* row, double cap, std::size_t n) {
    const float64x2_t capv = vdupq_n_f64(cap);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t r = vld1q_f64(row + i);
        float64x2_t a = vld1q_f64(acc + i);
        vst1q_f64(acc + i, vmaxq_f64(a, vminq_f64(capv, r)));
    }
    for (; i < n; ++i) acc[i] = std::max(acc[i], std::min(cap, row[i]));
}

double max_difference_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t best = vdupq_n_f64(-std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        best = vmaxq_f64(best, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    double out = std::max(vgetq_lane_f64(best, 0), vgetq_lane_f64(best, 1));
    for (; i < n; ++i) out = std::max(out, a[i] - b[i]);
    return out;
}

}  // namespace quasitree::kernels
