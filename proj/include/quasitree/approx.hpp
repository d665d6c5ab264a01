#pragma once

#include <vector>

#include "quasitree/endtree.hpp"
#include "quasitree/graph.hpp"
#include "quasitree/report.hpp"
#include "quasitree/shortest_paths.hpp"

namespace quasitree {

// Union of the canonical geodesics [x0, z], z in Z; vertices ascending.
std::vector<int> geodesic_union(const ShortestPaths& sp, int x0, const std::vector<int>& Z);

struct TreeApprox {
    std::vector<int> y_vertices;       // domain of the map, ascending
    std::vector<int> class_of_vertex;  // graph vertex -> tree node (-1 outside Y)
    RealTree tree;
    DistortionReport report;
};

// Tree approximation with products restricted to sequences inside Y. Bounds
// recorded: 2 delta (log2 n + 1) and the chain-length form 2 delta ceil(log2 n).
TreeApprox gromov_tree_approx(const ShortestPaths& sp, int x0, const std::vector<int>& Z,
                              double delta_fourpoint, double tol = kTol);

// Restriction of the full end tree map to Y; the error bound is independent
// of |Z|. When twoA/twoDeltaBound are nonnegative they are verified.
TreeApprox uniform_tree_approx(const ShortestPaths& sp, int x0, const std::vector<int>& Z,
                               double twoA = -1.0, double twoDeltaBound = -1.0,
                               double tol = kTol);

struct Subtree {
    std::vector<int> vertices;           // graph vertices in the subtree, insertion order
    std::vector<Edge> edges;             // graph-indexed tree edges
    std::vector<int> point_order;        // the input points
    Matrix point_dist_graph;             // d over the input points
    Matrix point_dist_tree;              // d_T over the input points
    DistortionReport report;             // image_d = d_T >= d
};

// Gromov-style incremental subtree: start with the canonical geodesic between
// the first two points, then attach each next point to its nearest subtree
// vertex by a canonical geodesic. Runs on shortest-path trees only, no
// all-pairs matrix needed.
Subtree incremental_subtree(const MetricGraph& g, const std::vector<int>& points);

struct SubsetCertificate {
    struct Sample {
        std::vector<int> z;
        double upper = 0.0;       // min over basepoints in Z of the restricted end tree error
        int upper_basepoint = 0;
        double lower = 0.0;       // max four-point defect over quadruples in Z, divided by 6
        int defect_witness[4] = {0, 0, 0, 0};
        bool pass = true;
    };
    std::vector<Sample> samples;
    double budget = 0.0;
    bool pass = true;  // every sample's upper bound within budget
};

SubsetCertificate finite_subset_certificate(const ShortestPaths& sp,
                                            const std::vector<std::vector<int>>& samples,
                                            double budget, double tol = kTol);

}  // namespace quasitree
