#pragma once

#include <vector>

#include "quasitree/graph.hpp"
#include "quasitree/matrix.hpp"

namespace quasitree {

struct VertexMaximin {
    double value = 0.0;
    std::vector<int> path;  // from x to y, min vertex weight on it equals value
};

// max over vertex paths from x to y of the minimum vertex weight on the path.
// Incremental union over vertices sorted by weight descending.
VertexMaximin maximin_vertex_path(const MetricGraph& g, const std::vector<double>& weight,
                                  int x, int y);

// Are x and y connected inside the subgraph induced by weight >= threshold?
bool threshold_connected(const MetricGraph& g, const std::vector<double>& weight,
                         double threshold, int x, int y);

// All-pairs maximin vertex-path values for one weight field, answered through
// a Kruskal reconstruction tree with binary lifting.
class VertexMaximinIndex {
public:
    VertexMaximinIndex(const MetricGraph& g, const std::vector<double>& weight);
    double query(int x, int y) const;

private:
    int lca(int a, int b) const;
    int node_count_ = 0;
    std::vector<double> value_;              // per reconstruction node
    std::vector<int> depth_;
    std::vector<std::vector<int>> up_;       // binary lifting table
    std::vector<double> weight_;
};

// Maximum spanning tree of the complete graph with weights W (diagonal
// ignored); parent[0] = -1. Dense Prim, deterministic tie-breaking.
void max_spanning_tree_complete(const Matrix& w, std::vector<int>& parent,
                                std::vector<double>& parent_weight);

// All-pairs minimax edge values on that spanning tree: out[r][v] = smallest
// parent-edge weight on the tree path from r to v, diagonal from `diagonal`.
Matrix tree_minimax_values(const std::vector<int>& parent,
                           const std::vector<double>& parent_weight,
                           const std::vector<double>& diagonal);

}  // namespace quasitree
