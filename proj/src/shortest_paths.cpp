#include "quasitree/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace quasitree {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// Window for treating two path lengths as tied when fixing predecessors.
constexpr double kPredTie = 1e-12;

bool tie(double a, double b) {
    return std::fabs(a - b) <= kPredTie * (1.0 + std::fabs(b));
}
}  // namespace

SsspResult sssp(const MetricGraph& g, int source) {
    const int n = g.vertex_count();
    SsspResult r;
    r.dist.assign(n, kInf);
    r.pred.assign(n, -1);
    r.dist[source] = 0.0;

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.emplace(0.0, source);
    std::vector<char> done(n, 0);

    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (auto [v, w] : g.adjacency(u)) {
            double nd = d + w;
            if (nd < r.dist[v] && !tie(nd, r.dist[v])) {
                r.dist[v] = nd;
                r.pred[v] = u;
                pq.emplace(nd, v);
            } else if (tie(nd, r.dist[v]) && u < r.pred[v]) {
                r.pred[v] = u;  // equal-length route through a smaller index
            }
        }
    }
    return r;
}

std::vector<int> ShortestPaths::geodesic(int x, int y) const {
    int s = std::min(x, y), t = std::max(x, y);
    std::vector<int> path;
    for (int v = t; v != -1; v = pred[s][v]) path.push_back(v);
    std::reverse(path.begin(), path.end());  // now s..t
    if (x > y) std::reverse(path.begin(), path.end());
    return path;
}

ShortestPaths all_pairs(const MetricGraph& g, int threads) {
    const int n = g.vertex_count();
    ShortestPaths sp;
    sp.dist = Matrix(n);
    sp.pred.assign(n, {});
    parallel_for(n, threads, [&](int s) {
        SsspResult r = sssp(g, s);
        for (int v = 0; v < n; ++v) sp.dist.at(s, v) = r.dist[v];
        sp.pred[s] = std::move(r.pred);
    });
    return sp;
}

void check_distance_matrix(const Matrix& d, double tol) {
    const int n = d.size();
    for (int i = 0; i < n; ++i) {
        if (std::fabs(d.at(i, i)) > tol) throw Error("distance matrix: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (d.at(i, j) < -tol) throw Error("distance matrix: negative entry");
            if (std::fabs(d.at(i, j) - d.at(j, i)) > tol) throw Error("distance matrix: asymmetric");
        }
    }
    // triangle inequality, exhaustive over triples
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            double best = kInf;
            const double* ri = d.row(i);
            const double* rk = d.row(k);
            for (int j = 0; j < n; ++j) best = std::min(best, ri[j] + rk[j]);
            if (d.at(i, k) > best + tol) throw Error("distance matrix: triangle inequality violated");
        }
    }
}

void check_edge_consistency(const MetricGraph& g, const Matrix& d, double tol) {
    for (const Edge& e : g.edges()) {
        if (d.at(e.u, e.v) > e.length + tol) {
            throw Error("distance exceeds edge length on (" + g.name(e.u) + ", " + g.name(e.v) + ")");
        }
    }
}

}  // namespace quasitree
