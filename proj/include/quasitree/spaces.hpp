#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasitree/graph.hpp"
#include "quasitree/matrix.hpp"
#include "quasitree/report.hpp"

namespace quasitree {

// Octile grid on [0,1] x [0,n]: horizontal, vertical and both diagonal edges
// at Euclidean lengths; labels carry coordinates. spacing must divide 1 and n.
MetricGraph gen_strip(double n, double spacing);

// The zigzag point sequence (0,0), (1,1), (0,2), (1,3), ... read off a strip's
// coordinate labels; vertex indices in that order.
std::vector<int> strip_zigzag_points(const MetricGraph& strip);

// Spine [0,1] with attachment points 0 and 1/k for k = 1..teeth, one tooth of
// the given length at each attachment (teeth subdivided into unit-ish steps).
MetricGraph gen_comb(int teeth, double tooth_length);

struct RectTree {
    MetricGraph graph;
    // midpoints_by_depth[k] lists the edge-midpoint vertex names introduced at
    // tree depth k+1; Y_n = union of the first n entries
    std::vector<std::vector<std::string>> midpoints_by_depth;

    std::vector<int> yn_points(int n) const;  // vertex indices of Y_n, BFS order
};

// Ball of the 4-regular tree with vertices blown up into rectangles
// [0,2] x [0,2^(k+1)] discretized as octile grids; connecting edges of length
// 1 attach at side midpoints and carry their midpoint as a vertex.
RectTree gen_rect_tree(int depth, double resolution);

// Uniform random recursive tree with lengths in (0, max_len].
MetricGraph gen_random_tree(int n, std::uint64_t seed, double max_len);

// Multiply each edge length by an independent factor in [1, 1+epsilon].
MetricGraph perturb_metric(const MetricGraph& g, double epsilon, std::uint64_t seed);

// Two-sided additive/multiplicative fit of a vertex map f between finite
// metric spaces, plus the surjectivity radius of the image.
QuasiIsometryReport qi_report(const std::vector<int>& f, const Matrix& dx, const Matrix& dy);

}  // namespace quasitree
