#pragma once

#include <array>
#include <cstdint>

#include "quasitree/matrix.hpp"

namespace quasitree {

// (x,y)_{x0} = (d(x0,x) + d(x0,y) - d(x,y)) / 2
double gromov_product(const Matrix& d, int x0, int x, int y);

// Full product matrix at one basepoint.
Matrix gromov_matrix(const Matrix& d, int x0);
void gromov_matrix_into(const Matrix& d, int x0, Matrix& out);

// Basepointed product tables; bgp is the bottleneck (maximin) variant and is
// filled by the endtree module.
struct GromovTable {
    int basepoint = 0;
    Matrix gp;
    Matrix bgp;
};

struct FourPointDelta {
    double delta = 0.0;
    // witness quadruple: basepoint w and x, y, z with
    // min{(x,y)_w, (y,z)_w} - (x,z)_w = delta
    int w = 0, x = 0, y = 0, z = 0;
};

// Exact maximum over all ordered quadruples, floored at zero. O(n^4) with the
// SIMD kernels on the inner sweep.
FourPointDelta four_point_delta(const Matrix& d, int threads = 0);

// Exact in (x,y,z) but only over `bases` sampled basepoints; a lower bound on
// the exact constant. Meant for instances past the desk-scale cutoff.
FourPointDelta four_point_delta_sampled(const Matrix& d, int bases, std::uint64_t seed,
                                        int threads = 0);

// max over triples of min(m(x,y), m(y,z)) - m(x,z); the four-point defect of a
// single basepointed product matrix, and the chain inequality defect of any
// meet/bottleneck table.
double triple_chain_defect(const Matrix& m, int threads = 0);

}  // namespace quasitree
