#include "quasitree/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace quasitree {

namespace {

// floor with a tolerance window so heights within kTol of an integer count as
// that integer
int kfloor(double x) { return static_cast<int>(std::floor(x + kTol)); }

}  // namespace

double tree_point_distance(const RealTree& t, const TreePoint& p, const TreePoint& q) {
    if (p.carrier == q.carrier) return std::fabs(p.height - q.height);
    int l = t.meet(p.carrier, q.carrier);
    if (l == p.carrier) return p.height + q.height - 2.0 * p.height;  // p on q's root path
    if (l == q.carrier) return p.height + q.height - 2.0 * q.height;
    return p.height + q.height - 2.0 * t.height(l);
}

int SimplicialTree::distance(int a, int b) const {
    int steps = 0;
    while (a != b) {
        if (verts[a].layer < verts[b].layer) {
            b = verts[b].parent;
        } else {
            a = verts[a].parent;
        }
        ++steps;
    }
    return steps;
}

Layering integer_layering(const RealTree& t) {
    Layering out;
    SimplicialTree& g = out.gamma;
    g.verts.push_back({0, -1, TreePoint{t.root(), 0.0}});

    // gamma vertex for the point at integer height k on the edge into node c
    std::map<std::pair<int, int>, int> vertex_at;

    const int nodes = t.node_count();
    for (int c = 0; c < nodes; ++c) {
        if (c == t.root()) continue;
        int lo = kfloor(t.height(t.parent(c))) + 1;
        int hi = kfloor(t.height(c));
        for (int k = lo; k <= hi; ++k) {
            int idx = g.vertex_count();
            g.verts.push_back({k, -1, TreePoint{c, static_cast<double>(k)}});
            vertex_at[{c, k}] = idx;
        }
    }

    // the gamma vertex holding the point at integer height k on the root path of node c
    auto locate = [&](int c, int k) -> int {
        if (k <= 0) return 0;
        int a = c;
        while (t.parent(a) >= 0 && kfloor(t.height(t.parent(a))) >= k) a = t.parent(a);
        auto it = vertex_at.find({a, k});
        if (it == vertex_at.end()) throw Error("layering: missing sphere vertex");
        return it->second;
    };

    for (int c = 0; c < nodes; ++c) {
        if (c == t.root()) continue;
        int lo = kfloor(t.height(t.parent(c))) + 1;
        int hi = kfloor(t.height(c));
        for (int k = lo; k <= hi; ++k) {
            int idx = vertex_at[{c, k}];
            g.verts[idx].parent = k - 1 > lo - 1 ? vertex_at[{c, k - 1}] : locate(t.parent(c), k - 1);
        }
    }

    out.psi.resize(nodes);
    for (int x = 0; x < nodes; ++x) {
        out.psi[x] = locate(x, kfloor(t.height(x)));
    }

    // structural checks: unique lower neighbor, layer = distance to root
    for (int v = 1; v < g.vertex_count(); ++v) {
        if (g.verts[v].parent < 0 || g.verts[g.verts[v].parent].layer != g.verts[v].layer - 1) {
            throw Error("layering: vertex without a unique lower neighbor");
        }
    }

    // the (1,2) bound on all mapped node pairs
    for (int x = 0; x < nodes; ++x) {
        for (int y = x + 1; y < nodes; ++y) {
            double dt = t.distance(x, y);
            double dg = g.distance(out.psi[x], out.psi[y]);
            if (dg - dt > 2.0 + kTol || dt - dg > 2.0 + kTol) {
                throw Error("layering: psi image violates the +-2 bound on nodes " +
                            std::to_string(x) + ", " + std::to_string(y));
            }
        }
    }
    return out;
}

DistortionReport phi_embedding(const Layering& l, const RealTree& t) {
    const SimplicialTree& g = l.gamma;
    const int m = g.vertex_count();
    DistortionReport r;
    r.image_dominates = false;
    r.max_additive = 0.0;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            double dg = g.distance(a, b);
            double dt = tree_point_distance(t, g.verts[a].source, g.verts[b].source);
            if (dt > dg + kTol) throw Error("phi: tree distance exceeds gamma distance");
            if (dg - dt > 2.0 + kTol) throw Error("phi: additive error exceeds 2");
            double err = dg - dt;
            if (err > r.max_additive) {
                r.max_additive = err;
                r.witness = {a, b, dg, dt};
            }
        }
    }
    r.additive_C = r.max_additive;
    r.add_bound("|d_T(phi.,phi.) - d_Gamma| <= 2", 2.0, r.max_additive, kTol);

    double radius = 0.0;
    for (int x = 0; x < t.node_count(); ++x) {
        if (t.children(x).empty()) {
            radius = std::max(radius, t.height(x) - kfloor(t.height(x)));
        }
    }
    r.surjectivity_radius = radius;
    return r;
}

SimplicialTree prune_leaves(const SimplicialTree& g, int n) {
    const int m = g.vertex_count();
    std::vector<char> alive(m, 1);
    for (int round = 0; round < n; ++round) {
        std::vector<int> degree(m, 0);
        for (int v = 1; v < m; ++v) {
            if (alive[v]) degree[g.verts[v].parent] += 1;
        }
        std::vector<int> drop;
        for (int v = 1; v < m; ++v) {
            if (alive[v] && degree[v] == 0) drop.push_back(v);
        }
        if (drop.empty()) break;
        for (int v : drop) alive[v] = 0;
    }
    SimplicialTree out;
    std::vector<int> remap(m, -1);
    for (int v = 0; v < m; ++v) {
        if (alive[v]) {
            remap[v] = out.vertex_count();
            out.verts.push_back(g.verts[v]);
        }
    }
    for (auto& v : out.verts) {
        if (v.parent >= 0) v.parent = remap[v.parent];
    }
    return out;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
        while (p[a] != a) {
            p[a] = p[p[a]];
            a = p[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

int count_deep_components(const MetricGraph& g, const Matrix& d, int x, double r, double R) {
    const int n = g.vertex_count();
    std::vector<char> keep(n, 0);
    for (int v = 0; v < n; ++v) keep[v] = d.at(x, v) > r;
    Dsu dsu(n);
    for (const Edge& e : g.edges()) {
        if (keep[e.u] && keep[e.v]) dsu.unite(e.u, e.v);
    }
    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
        if (keep[v]) comps[dsu.find(v)].push_back(v);
    }
    int count = 0;
    for (auto& [root, vs] : comps) {
        double diam = 0.0;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                diam = std::max(diam, d.at(vs[i], vs[j]));
            }
        }
        if (diam >= R - kTol) ++count;
    }
    return count;
}

int count_deep_components(const RealTree& t, int node, double r, double R) {
    const int n = t.node_count();
    // exact distances from the chosen node along the tree
    std::vector<double> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = t.distance(node, v);

    std::vector<char> keep(n, 0);
    for (int v = 0; v < n; ++v) keep[v] = dist[v] > r;

    Dsu dsu(n);
    struct Stub {
        int at;
        double len;
    };
    std::vector<Stub> stubs;
    for (int c = 0; c < n; ++c) {
        int p = t.parent(c);
        if (p < 0) continue;
        if (keep[c] && keep[p]) {
            dsu.unite(c, p);
        } else if (keep[c] != keep[p]) {
            int far = keep[c] ? c : p;
            stubs.push_back({far, dist[far] - r});
        }
    }

    // per-component weighted tree with one virtual pendant per stub, diameter
    // by the standard double sweep
    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
        if (keep[v]) comps[dsu.find(v)].push_back(v);
    }
    int count = 0;
    for (auto& [croot, vs] : comps) {
        std::map<int, int> local;
        for (int v : vs) local[v] = static_cast<int>(local.size());
        int m = static_cast<int>(vs.size());
        std::vector<std::vector<std::pair<int, double>>> adj(m);
        for (int v : vs) {
            int p = t.parent(v);
            if (p >= 0 && keep[p] && dsu.find(p) == croot) {
                double w = std::fabs(t.height(v) - t.height(p));
                adj[local[v]].emplace_back(local[p], w);
                adj[local[p]].emplace_back(local[v], w);
            }
        }
        for (const Stub& s : stubs) {
            if (keep[s.at] && dsu.find(s.at) == croot) {
                adj.emplace_back();
                int virt = static_cast<int>(adj.size()) - 1;
                adj[local[s.at]].emplace_back(virt, s.len);
                adj[virt].emplace_back(local[s.at], s.len);
            }
        }
        auto sweep = [&](int start) {
            std::vector<double> dd(adj.size(), -1.0);
            dd[start] = 0.0;
            std::vector<int> stack{start};
            int arg = start;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [w, len] : adj[u]) {
                    if (dd[w] < 0.0) {
                        dd[w] = dd[u] + len;
                        if (dd[w] > dd[arg]) arg = w;
                        stack.push_back(w);
                    }
                }
            }
            return std::pair<int, double>(arg, dd[arg]);
        };
        auto [a, ignored] = sweep(0);
        auto [b, diam] = sweep(a);
        (void)b;
        (void)ignored;
        if (diam >= R - kTol) ++count;
    }
    return count;
}

}  // namespace quasitree
