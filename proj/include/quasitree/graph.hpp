#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quasitree/common.hpp"

namespace quasitree {

struct Edge {
    int u = 0;
    int v = 0;
    double length = 0.0;
};

// Finite connected weighted graph carrying the shortest-path metric.
// Vertices are indexed by order of appearance; tie-breaking rules across the
// library ("lowest identifier") refer to this index order.
class MetricGraph {
public:
    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

    // -1 when absent
    int find_vertex(const std::string& name) const;
    // throws Error when absent
    int vertex(const std::string& name) const;

    const std::vector<Edge>& edges() const { return edges_; }

    // neighbors sorted by index
    const std::vector<std::pair<int, double>>& adjacency(int v) const { return adj_[v]; }

    bool has_labels() const { return !labels_.empty(); }
    // empty vector when the vertex carries no label
    const std::vector<double>& label(int v) const;

    double min_edge_length() const;
    double max_edge_length() const;

private:
    friend class GraphBuilder;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<std::vector<double>> labels_;  // per-vertex coordinates, may be empty
};

class GraphBuilder {
public:
    int add_vertex(const std::string& name);
    int add_vertex(const std::string& name, std::vector<double> label);
    void add_edge(const std::string& u, const std::string& v, double length);
    void add_edge(int u, int v, double length);

    // Validates: positive lengths, no self-loops, no duplicate pairs, connected.
    MetricGraph build() &&;

private:
    MetricGraph g_;
};

}  // namespace quasitree
