#include "quasitree/maximin.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "quasitree/common.hpp"

namespace quasitree {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// vertices sorted by weight descending, index ascending on ties
std::vector<int> by_weight_desc(const std::vector<double>& weight) {
    std::vector<int> order(weight.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weight[a] > weight[b]; });
    return order;
}

std::vector<int> bfs_path(const MetricGraph& g, const std::vector<char>& active, int x, int y) {
    const int n = g.vertex_count();
    std::vector<int> pred(n, -2);
    std::queue<int> q;
    q.push(x);
    pred[x] = -1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == y) break;
        for (auto [v, w] : g.adjacency(u)) {
            if (active[v] && pred[v] == -2) {
                pred[v] = u;
                q.push(v);
            }
        }
    }
    std::vector<int> path;
    for (int v = y; v != -1; v = pred[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

VertexMaximin maximin_vertex_path(const MetricGraph& g, const std::vector<double>& weight,
                                  int x, int y) {
    const int n = g.vertex_count();
    VertexMaximin out;
    if (x == y) {
        out.value = weight[x];
        out.path = {x};
        return out;
    }
    std::vector<int> order = by_weight_desc(weight);
    Dsu dsu(n);
    std::vector<char> active(n, 0);
    double value = 0.0;
    for (int v : order) {
        active[v] = 1;
        for (auto [u, w] : g.adjacency(v)) {
            if (active[u]) dsu.unite(u, v);
        }
        if (active[x] && active[y] && dsu.find(x) == dsu.find(y)) {
            value = weight[v];
            break;
        }
    }
    out.value = value;
    std::vector<char> eligible(n, 0);
    for (int v = 0; v < n; ++v) eligible[v] = weight[v] >= value;
    out.path = bfs_path(g, eligible, x, y);
    return out;
}

bool threshold_connected(const MetricGraph& g, const std::vector<double>& weight,
                         double threshold, int x, int y) {
    if (weight[x] < threshold || weight[y] < threshold) return false;
    std::vector<char> active(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) active[v] = weight[v] >= threshold;
    std::vector<int> path = bfs_path(g, active, x, y);
    return !path.empty() && path.front() == x && path.back() == y;
}

VertexMaximinIndex::VertexMaximinIndex(const MetricGraph& g, const std::vector<double>& weight)
    : weight_(weight) {
    const int n = g.vertex_count();
    // Kruskal over edges weighted min(weight[u], weight[v]), descending; each
    // union creates a reconstruction node whose value is the merge threshold.
    struct E {
        double w;
        int u, v;
    };
    std::vector<E> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        edges.push_back({std::min(weight[e.u], weight[e.v]), std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::stable_sort(edges.begin(), edges.end(), [](const E& a, const E& b) {
        if (a.w != b.w) return a.w > b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });

    node_count_ = n;
    value_.assign(2 * n - 1, 0.0);
    std::vector<int> parent(2 * n - 1, -1);
    std::vector<int> comp_root(n);
    std::iota(comp_root.begin(), comp_root.end(), 0);
    Dsu dsu(n);
    for (int v = 0; v < n; ++v) value_[v] = weight[v];
    for (const E& e : edges) {
        int a = dsu.find(e.u), b = dsu.find(e.v);
        if (a == b) continue;
        int node = node_count_++;
        value_[node] = e.w;
        parent[comp_root[a]] = node;
        parent[comp_root[b]] = node;
        dsu.unite(a, b);
        comp_root[dsu.find(a)] = node;
    }
    value_.resize(node_count_);
    parent.resize(node_count_);

    depth_.assign(node_count_, 0);
    for (int v = node_count_ - 1; v >= 0; --v) {
        if (parent[v] >= 0) depth_[v] = depth_[parent[v]] + 1;
    }
    int levels = 1;
    while ((1 << levels) < node_count_) ++levels;
    up_.assign(levels, std::vector<int>(node_count_, -1));
    up_[0] = parent;
    for (int k = 1; k < levels; ++k) {
        for (int v = 0; v < node_count_; ++v) {
            int mid = up_[k - 1][v];
            up_[k][v] = mid < 0 ? -1 : up_[k - 1][mid];
        }
    }
}

int VertexMaximinIndex::lca(int a, int b) const {
    if (depth_[a] < depth_[b]) std::swap(a, b);
    int diff = depth_[a] - depth_[b];
    for (std::size_t k = 0; k < up_.size(); ++k) {
        if (diff & (1 << k)) a = up_[k][a];
    }
    if (a == b) return a;
    for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
        if (up_[k][a] != up_[k][b]) {
            a = up_[k][a];
            b = up_[k][b];
        }
    }
    return up_[0][a];
}

double VertexMaximinIndex::query(int x, int y) const {
    if (x == y) return weight_[x];
    // merge thresholds only account for edges; endpoints cap the path minimum
    int l = lca(x, y);
    return std::min({weight_[x], weight_[y], value_[l]});
}

void max_spanning_tree_complete(const Matrix& w, std::vector<int>& parent,
                                std::vector<double>& parent_weight) {
    const int n = w.size();
    parent.assign(n, -1);
    parent_weight.assign(n, 0.0);
    if (n <= 1) return;
    std::vector<char> in_tree(n, 0);
    std::vector<double> key(n, -std::numeric_limits<double>::infinity());
    std::vector<int> from(n, 0);
    in_tree[0] = 1;
    const double* r0 = w.row(0);
    for (int j = 1; j < n; ++j) {
        key[j] = r0[j];
        from[j] = 0;
    }
    for (int it = 1; it < n; ++it) {
        int best = -1;
        for (int j = 0; j < n; ++j) {
            if (!in_tree[j] && (best < 0 || key[j] > key[best])) best = j;
        }
        in_tree[best] = 1;
        parent[best] = from[best];
        parent_weight[best] = key[best];
        const double* rb = w.row(best);
        for (int j = 0; j < n; ++j) {
            if (!in_tree[j] && rb[j] > key[j]) {
                key[j] = rb[j];
                from[j] = best;
            }
        }
    }
}

Matrix tree_minimax_values(const std::vector<int>& parent,
                           const std::vector<double>& parent_weight,
                           const std::vector<double>& diagonal) {
    const int n = static_cast<int>(parent.size());
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (int v = 0; v < n; ++v) {
        if (parent[v] >= 0) {
            adj[v].emplace_back(parent[v], parent_weight[v]);
            adj[parent[v]].emplace_back(v, parent_weight[v]);
        }
    }
    Matrix out(n);
    std::vector<int> stack;
    for (int r = 0; r < n; ++r) {
        double* row = out.row(r);
        row[r] = diagonal[r];
        stack.assign(1, r);
        std::vector<char> seen(n, 0);
        seen[r] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, w] : adj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    row[v] = u == r ? w : std::min(row[u], w);
                    stack.push_back(v);
                }
            }
        }
    }
    return out;
}

}  // namespace quasitree
