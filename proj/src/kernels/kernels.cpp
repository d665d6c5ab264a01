#include "quasitree/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace quasitree::kernels {

void maximin_update_scalar(double* acc, const double* row, double cap, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        acc[i] = std::max(acc[i], std::min(cap, row[i]));
    }
}

double max_difference_scalar(const double* a, const double* b, std::size_t n) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::max(best, a[i] - b[i]);
    }
    return best;
}

#if defined(QUASITREE_HAVE_AVX2)
void maximin_update_avx2(double* acc, const double* row, double cap, std::size_t n);
double max_difference_avx2(const double* a, const double* b, std::size_t n);
#endif
#if defined(QUASITREE_HAVE_NEON)
void maximin_update_neon(double* acc, const double* row, double cap, std::size_t n);
double max_difference_neon(const double* a, const double* b, std::size_t n);
#endif

namespace {

std::atomic<bool> g_force_scalar{false};

Backend detect_backend() {
#if defined(QUASITREE_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
#if defined(QUASITREE_HAVE_NEON)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

Backend cached_backend() {
    static const Backend b = detect_backend();
    return b;
}

}  // namespace

Backend active_backend() {
    return g_force_scalar.load(std::memory_order_relaxed) ? Backend::Scalar : cached_backend();
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
        default: return "scalar";
    }
}

void force_scalar(bool on) {
    g_force_scalar.store(on, std::memory_order_relaxed);
}

void maximin_update(double* acc, const double* row, double cap, std::size_t n) {
    switch (active_backend()) {
#if defined(QUASITREE_HAVE_AVX2)
        case Backend::Avx2: maximin_update_avx2(acc, row, cap, n); return;
#endif
#if defined(QUASITREE_HAVE_NEON)
        case Backend::Neon: maximin_update_neon(acc, row, cap, n); return;
#endif
        default: maximin_update_scalar(acc, row, cap, n); return;
    }
}

double max_difference(const double* a, const double* b, std::size_t n) {
    switch (active_backend()) {
#if defined(QUASITREE_HAVE_AVX2)
        case Backend::Avx2: return max_difference_avx2(a, b, n);
#endif
#if defined(QUASITREE_HAVE_NEON)
        case Backend::Neon: return max_difference_neon(a, b, n);
#endif
        default: return max_difference_scalar(a, b, n);
    }
}

}  // namespace quasitree::kernels
