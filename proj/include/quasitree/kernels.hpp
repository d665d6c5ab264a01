#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the delta scan, the maximin dynamic
// programs and the distortion sweeps. Scalar reference implementations are
// always available; AVX2/NEON variants are selected once at runtime and are
// required to produce bit-identical results (the kernels only move, compare
// and subtract values, so lane width cannot change the outcome).

namespace quasitree::kernels {

enum class Backend { Scalar, Avx2, Neon };

// acc[i] = max(acc[i], min(cap, row[i]))
void maximin_update(double* acc, const double* row, double cap, std::size_t n);

// max over i of a[i] - b[i]; -infinity when n == 0
double max_difference(const double* a, const double* b, std::size_t n);

void maximin_update_scalar(double* acc, const double* row, double cap, std::size_t n);
double max_difference_scalar(const double* a, const double* b, std::size_t n);

Backend active_backend();
const char* backend_name(Backend b);

// Testing hook: drop back to the scalar kernels regardless of CPU support.
void force_scalar(bool on);

}  // namespace quasitree::kernels
