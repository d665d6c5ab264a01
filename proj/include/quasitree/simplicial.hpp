#pragma once

#include <vector>

#include "quasitree/endtree.hpp"
#include "quasitree/graph.hpp"
#include "quasitree/report.hpp"

namespace quasitree {

// A point of a real tree: the location at `height` on the edge ending at
// `carrier` (root point is {root, 0}).
struct TreePoint {
    int carrier = 0;
    double height = 0.0;
};

double tree_point_distance(const RealTree& t, const TreePoint& p, const TreePoint& q);

// Unit-edge layered tree: vertex k>0 hangs under exactly one vertex at layer
// k-1; vertex 0 is the root.
struct SimplicialTree {
    struct Vertex {
        int layer = 0;
        int parent = -1;
        TreePoint source;  // tree point the vertex was cut from
    };
    std::vector<Vertex> verts;

    int vertex_count() const { return static_cast<int>(verts.size()); }
    int distance(int a, int b) const;  // unit path metric
};

struct Layering {
    SimplicialTree gamma;
    std::vector<int> psi;  // tree node -> gamma vertex
};

// Vertices of the layered tree are the intersections of the real tree with
// integer spheres around the root; psi maps a node to the point at floor
// height on its root branch. The +-2 bound is verified on all node pairs.
Layering integer_layering(const RealTree& t);

// phi sends each gamma vertex to its source point. Verifies
// d_gamma - 2 <= d_T(phi, phi) <= d_gamma on all vertex pairs and reports the
// coarse surjectivity radius (largest fractional leaf tail, < 1).
DistortionReport phi_embedding(const Layering& l, const RealTree& t);

// n rounds of simultaneous leaf removal; the root survives every round.
// Surviving vertices keep their relative order.
SimplicialTree prune_leaves(const SimplicialTree& g, int n);

// Connected components of the space minus the closed ball B(x, r) whose
// diameter is at least R. Graph variant measures diameters in the ambient
// shortest-path metric; the tree variant is exact on the continuum tree.
int count_deep_components(const MetricGraph& g, const Matrix& d, int x, double r, double R);
int count_deep_components(const RealTree& t, int node, double r, double R);

}  // namespace quasitree
