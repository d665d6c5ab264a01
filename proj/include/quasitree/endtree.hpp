#pragma once

#include <string>
#include <vector>

#include "quasitree/graph.hpp"
#include "quasitree/gromov.hpp"
#include "quasitree/matrix.hpp"
#include "quasitree/maximin.hpp"
#include "quasitree/report.hpp"
#include "quasitree/shortest_paths.hpp"

namespace quasitree {

// Bottleneck Gromov products at x0: for each pair the maximum over vertex
// sequences x = x1..xk = y of the minimum consecutive product. Computed as
// minimax values on a maximum spanning tree of the complete product graph;
// contractually identical to the brute-force maximin dynamic program.
Matrix bottleneck_gromov_products(const Matrix& d, int x0);

GromovTable gromov_table(const Matrix& d, int x0);

// d'(x,y) = d(x0,x) + d(x0,y) - 2 (x,y)'_{x0}
Matrix dprime_metric(const Matrix& d, int x0);
Matrix dprime_from_bgp(const Matrix& d, const Matrix& bgp, int x0);

struct Quotient {
    std::vector<int> class_of;                // vertex -> class
    std::vector<std::vector<int>> members;    // class -> vertices, ascending
    std::vector<double> height;               // class -> d(x0, members)
    Matrix dstar;                             // metric on classes
    int basepoint_class = 0;                  // always class 0
};

// Classes under d' <= tol. Class 0 is the basepoint's class; the rest are
// ordered by smallest member. Throws on tolerance-induced non-transitivity
// and when members of one class sit at different heights.
Quotient quotient_classes(const Matrix& d, const Matrix& dprime, int x0, double tol = kTol);

// Rooted real tree realizing a dendrogram metric: classes become nodes at
// their heights, merges become branch nodes at the pairwise meet heights.
class RealTree {
public:
    int node_count() const { return static_cast<int>(height_.size()); }
    int root() const { return root_; }
    double height(int node) const { return height_[node]; }
    int parent(int node) const { return parent_[node]; }
    int depth(int node) const { return depth_[node]; }
    bool is_class_node(int node) const { return !members_[node].empty(); }
    const std::vector<int>& members(int node) const { return members_[node]; }
    int node_of_class(int cls) const { return cls; }  // classes are nodes 0..k-1
    const std::vector<int>& children(int node) const { return children_[node]; }

    int meet(int a, int b) const;
    double meet_height(int a, int b) const;
    double distance(int a, int b) const;  // height(a) + height(b) - 2 meet

    // exported node name: class nodes use a representative label, synthetic
    // branch nodes get "b<k>"
    std::string node_label(int node, const std::vector<std::string>& vertex_names) const;

    // construction use
    friend RealTree build_dendrogram(const std::vector<double>& heights, const Matrix& meet,
                                     const std::vector<std::vector<int>>& members, double tol);

private:
    void finalize();
    std::vector<double> height_;
    std::vector<int> parent_;
    std::vector<int> depth_;
    std::vector<std::vector<int>> members_;
    std::vector<std::vector<int>> children_;
    int root_ = 0;
};

// Generic dendrogram builder: item 0 must have height 0 and meet(0, j) = 0;
// meet must satisfy meet(i,k) >= min(meet(i,j), meet(j,k)) - tol. Items become
// nodes 0..k-1 carrying the given member lists.
RealTree build_dendrogram(const std::vector<double>& heights, const Matrix& meet,
                          const std::vector<std::vector<int>>& members, double tol);

struct EndTree {
    int basepoint = 0;
    Quotient quotient;
    RealTree tree;
    Matrix bgp;  // bottleneck products on the input vertices

    int node_of_vertex(int v) const { return quotient.class_of[v]; }
    double dstar(int x, int y) const { return quotient.dstar.at(quotient.class_of[x], quotient.class_of[y]); }
};

// Full pipeline: products -> d' -> quotient -> tree, with the structural
// verifications (merge monotonicity, entrywise realization of d*, equal
// heights inside classes, zero four-point defect of d* up to `fourpoint_limit`
// classes, triple inequality at the basepoint beyond that).
EndTree build_end_tree(const Matrix& d, int x0, double tol = kTol, int fourpoint_limit = 160);

// Distortion of the quotient map x -> [x]: error d(x,y) - d*([x],[y]) per
// pair, plus the exactness check on every canonical geodesic from x0.
DistortionReport end_map_report(const ShortestPaths& sp, const EndTree& t, double tol = kTol);

struct ComponentOracleResult {
    double sigma = 0.0;              // sup radius
    std::vector<int> witness_path;   // path staying at distance >= sigma
};

// sup of r such that x and y stay connected outside the closed ball B(x0,r);
// equals the maximin vertex-path value for the weight field d(x0, .).
ComponentOracleResult component_sup_radius(const MetricGraph& g, const Matrix& d, int x0,
                                           int x, int y);

// a^(-h) where h is the meet height of the classes of x and y.
double visual_distance(const EndTree& t, int x, int y, double a);

}  // namespace quasitree
