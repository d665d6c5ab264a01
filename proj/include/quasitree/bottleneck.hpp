#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quasitree/graph.hpp"
#include "quasitree/matrix.hpp"
#include "quasitree/maximin.hpp"
#include "quasitree/report.hpp"
#include "quasitree/shortest_paths.hpp"

namespace quasitree {

// Largest minimum distance to z over vertex paths from x to y; the value is 0
// exactly when every path meets z itself.
VertexMaximin widest_avoidance(const MetricGraph& g, const Matrix& d, int x, int y, int z);

struct BottleneckConstant {
    double Delta = 0.0;
    BottleneckWitness witness;
};

// Manning constant over vertex pairs: z ranges over the canonical geodesic of
// each pair, or over every geodesic vertex when all_geodesics is set (v lies
// on some geodesic iff d(x,v) + d(v,y) = d(x,y)).
BottleneckConstant bottleneck_constant(const MetricGraph& g, const ShortestPaths& sp,
                                       bool all_geodesics = false, int threads = 0,
                                       double tol = kTol);

using BgpProvider = std::function<Matrix(int basepoint)>;

struct ChainDefect {
    double A = 0.0;
    ChainDefectWitness witness;
};

// A = max over basepoints and pairs of (x,y)'_{x0} - (x,y)_{x0}; the least
// constant making every vertex chain lose at most A.
ChainDefect chain_defect(const Matrix& d, const BgpProvider& bgp, int threads = 0);
ChainDefect chain_defect_at(const Matrix& d, const BgpProvider& bgp, int x0);

struct CertifyOptions {
    double budget = -1.0;       // negative: report only
    bool all_geodesics = false;
    bool single_basepoint = false;  // A at basepoint 0 only (speed mode)
    int delta_sample_cutoff = 300;  // past this many vertices delta is sampled
    int delta_sample_bases = 128;
    std::uint64_t seed = 1;
    int threads = 0;
};

BottleneckReport certify_quasi_tree(const MetricGraph& g, const ShortestPaths& sp,
                                    const CertifyOptions& opt = {});

}  // namespace quasitree
