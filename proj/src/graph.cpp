#include "quasitree/graph.hpp"

#include <algorithm>
#include <queue>

namespace quasitree {

namespace {
const std::vector<double> kNoLabel;
}

int MetricGraph::find_vertex(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int MetricGraph::vertex(const std::string& name) const {
    int v = find_vertex(name);
    if (v < 0) throw Error("unknown vertex '" + name + "'");
    return v;
}

const std::vector<double>& MetricGraph::label(int v) const {
    if (labels_.empty()) return kNoLabel;
    return labels_[v];
}

double MetricGraph::min_edge_length() const {
    double m = edges_.empty() ? 0.0 : edges_[0].length;
    for (const Edge& e : edges_) m = std::min(m, e.length);
    return m;
}

double MetricGraph::max_edge_length() const {
    double m = 0.0;
    for (const Edge& e : edges_) m = std::max(m, e.length);
    return m;
}

int GraphBuilder::add_vertex(const std::string& name) {
    return add_vertex(name, {});
}

int GraphBuilder::add_vertex(const std::string& name, std::vector<double> label) {
    if (name.empty()) throw Error("empty vertex identifier");
    auto [it, inserted] = g_.index_.emplace(name, static_cast<int>(g_.names_.size()));
    if (!inserted) throw Error("duplicate vertex '" + name + "'");
    g_.names_.push_back(name);
    g_.labels_.push_back(std::move(label));
    return it->second;
}

void GraphBuilder::add_edge(const std::string& u, const std::string& v, double length) {
    int ui = g_.find_vertex(u);
    if (ui < 0) throw Error("edge endpoint '" + u + "' is not a declared vertex");
    int vi = g_.find_vertex(v);
    if (vi < 0) throw Error("edge endpoint '" + v + "' is not a declared vertex");
    add_edge(ui, vi, length);
}

void GraphBuilder::add_edge(int u, int v, double length) {
    if (u == v) throw Error("self-loop on vertex '" + g_.names_[u] + "'");
    if (!(length > 0.0)) {
        throw Error("nonpositive length on edge (" + g_.names_[u] + ", " + g_.names_[v] + ")");
    }
    g_.edges_.push_back({u, v, length});
}

MetricGraph GraphBuilder::build() && {
    const int n = static_cast<int>(g_.names_.size());
    if (n == 0) throw Error("graph has no vertices");

    bool any_label = false;
    for (const auto& l : g_.labels_) any_label = any_label || !l.empty();
    if (!any_label) g_.labels_.clear();

    g_.adj_.assign(n, {});
    std::vector<std::vector<int>> seen(n);
    for (const Edge& e : g_.edges_) {
        int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        if (std::find(seen[a].begin(), seen[a].end(), b) != seen[a].end()) {
            throw Error("duplicate edge (" + g_.names_[a] + ", " + g_.names_[b] + ")");
        }
        seen[a].push_back(b);
        g_.adj_[e.u].emplace_back(e.v, e.length);
        g_.adj_[e.v].emplace_back(e.u, e.length);
    }
    for (auto& nb : g_.adj_) std::sort(nb.begin(), nb.end());

    // connectivity
    std::vector<char> visited(n, 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [v, w] : g_.adj_[u]) {
            if (!visited[v]) {
                visited[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    if (reached != n) {
        for (int v = 0; v < n; ++v) {
            if (!visited[v]) {
                throw Error("disconnected graph: vertex '" + g_.names_[v] +
                            "' unreachable from '" + g_.names_[0] + "'");
            }
        }
    }
    return std::move(g_);
}

}  // namespace quasitree
