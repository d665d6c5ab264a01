#pragma once

#include <vector>

#include "quasitree/graph.hpp"
#include "quasitree/matrix.hpp"

namespace quasitree {

struct SsspResult {
    std::vector<double> dist;
    std::vector<int> pred;  // -1 at the source
};

// Dijkstra with deterministic predecessors: among relaxations within a
// relative tie window the smallest-index predecessor wins.
SsspResult sssp(const MetricGraph& g, int source);

// All-pairs shortest paths plus the predecessor table that fixes one
// canonical geodesic per ordered pair.
struct ShortestPaths {
    Matrix dist;
    std::vector<std::vector<int>> pred;  // pred[s][v]

    // Vertex path from x to y following the predecessor tree rooted at
    // min(x, y); this is the canonical geodesic of the unordered pair.
    std::vector<int> geodesic(int x, int y) const;
};

ShortestPaths all_pairs(const MetricGraph& g, int threads = 0);

// Validation helpers for the metric invariants.
void check_distance_matrix(const Matrix& d, double tol = kTol);                 // symmetry, diagonal, triangle
void check_edge_consistency(const MetricGraph& g, const Matrix& d, double tol = kTol);

}  // namespace quasitree
