#include "quasitree/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "quasitree/gromov.hpp"
#include "quasitree/maximin.hpp"

namespace quasitree {

std::vector<int> geodesic_union(const ShortestPaths& sp, int x0, const std::vector<int>& Z) {
    std::set<int> ys;
    ys.insert(x0);
    for (int z : Z) {
        std::vector<int> path = sp.geodesic(x0, z);
        ys.insert(path.begin(), path.end());
    }
    return {ys.begin(), ys.end()};
}

namespace {

// Shared tail: quotient the restricted pseudometric, build the dendrogram,
// report distortion plus the per-geodesic isometry check.
TreeApprox assemble(const ShortestPaths& sp, int x0, const std::vector<int>& Z,
                    const std::vector<int>& ys, const Matrix& bgp_y, double tol) {
    const Matrix& d = sp.dist;
    const int m = static_cast<int>(ys.size());
    std::vector<int> pos_of(d.size(), -1);
    for (int i = 0; i < m; ++i) pos_of[ys[i]] = i;

    Matrix dp(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            dp.at(i, j) = i == j ? 0.0
                                 : d.at(x0, ys[i]) + d.at(x0, ys[j]) - 2.0 * bgp_y.at(i, j);
        }
    }
    // restricted distance matrix over Y, basepoint first for the quotient
    Matrix dy(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) dy.at(i, j) = d.at(ys[i], ys[j]);
    }
    Quotient q = quotient_classes(dy, dp, pos_of[x0], tol);

    const int k = static_cast<int>(q.members.size());
    Matrix meet(k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            meet.at(a, b) = a == b ? q.height[a] : bgp_y.at(q.members[a][0], q.members[b][0]);
        }
    }
    // members in graph vertex ids
    std::vector<std::vector<int>> members(k);
    for (int c = 0; c < k; ++c) {
        for (int i : q.members[c]) members[c].push_back(ys[i]);
    }
    TreeApprox out;
    out.y_vertices = ys;
    out.tree = build_dendrogram(q.height, meet, members, tol);
    out.class_of_vertex.assign(d.size(), -1);
    for (int i = 0; i < m; ++i) out.class_of_vertex[ys[i]] = q.class_of[i];

    DistortionReport& r = out.report;
    r.max_additive = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            double dxy = dy.at(i, j);
            double img = q.dstar.at(q.class_of[i], q.class_of[j]);
            if (img > dxy + tol) throw Error("tree approximation: expansion on a pair");
            if (dxy - img > r.max_additive) {
                r.max_additive = dxy - img;
                r.witness = {ys[i], ys[j], dxy, img};
            }
        }
    }
    r.additive_C = r.max_additive;

    // isometry on each canonical geodesic [x0, z]
    r.geodesic_isometry = true;
    for (int z : Z) {
        std::vector<int> path = sp.geodesic(x0, z);
        for (int v : path) {
            double img = q.dstar.at(q.class_of[pos_of[v]], q.class_of[pos_of[z]]);
            double dev = std::fabs(img - d.at(v, z));
            r.geodesic_max_deviation = std::max(r.geodesic_max_deviation, dev);
            if (dev > tol) r.geodesic_isometry = false;
        }
    }
    return out;
}

}  // namespace

TreeApprox gromov_tree_approx(const ShortestPaths& sp, int x0, const std::vector<int>& Z,
                              double delta_fourpoint, double tol) {
    if (Z.empty()) throw Error("tree approximation: empty subset");
    std::vector<int> ys = geodesic_union(sp, x0, Z);
    const int m = static_cast<int>(ys.size());

    // restricted bottleneck products: maximin over sequences inside Y, via a
    // maximum spanning tree of the complete product graph on Y
    Matrix gp(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            gp.at(i, j) = gromov_product(sp.dist, x0, ys[i], ys[j]);
        }
    }
    std::vector<int> parent;
    std::vector<double> pw;
    max_spanning_tree_complete(gp, parent, pw);
    std::vector<double> diag(m);
    for (int i = 0; i < m; ++i) diag[i] = gp.at(i, i);
    Matrix bgp_y = tree_minimax_values(parent, pw, diag);

    TreeApprox out = assemble(sp, x0, Z, ys, bgp_y, tol);
    const double n = static_cast<double>(Z.size());
    double log_bound = 2.0 * delta_fourpoint * (std::log2(n) + 1.0);
    double chain_bound = 2.0 * delta_fourpoint * std::ceil(std::log2(n));
    out.report.add_bound("2*delta*(log2(n)+1)", log_bound, out.report.max_additive, tol);
    out.report.add_bound("2*delta*ceil(log2(n))", chain_bound, out.report.max_additive, tol);
    return out;
}

TreeApprox uniform_tree_approx(const ShortestPaths& sp, int x0, const std::vector<int>& Z,
                               double twoA, double twoDeltaBound, double tol) {
    if (Z.empty()) throw Error("tree approximation: empty subset");
    std::vector<int> ys = geodesic_union(sp, x0, Z);
    const int m = static_cast<int>(ys.size());

    Matrix bgp_full = bottleneck_gromov_products(sp.dist, x0);
    Matrix bgp_y(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) bgp_y.at(i, j) = bgp_full.at(ys[i], ys[j]);
    }
    TreeApprox out = assemble(sp, x0, Z, ys, bgp_y, tol);
    if (twoA >= 0.0) out.report.add_bound("2A", twoA, out.report.max_additive, tol);
    if (twoDeltaBound >= 0.0) {
        out.report.add_bound("2(Delta+2delta)", twoDeltaBound, out.report.max_additive, tol);
    }
    return out;
}

Subtree incremental_subtree(const MetricGraph& g, const std::vector<int>& points) {
    if (points.size() < 2) throw Error("subtree approximation: need at least 2 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) throw Error("subtree approximation: repeated point");
        }
    }
    const int n = g.vertex_count();
    const int m = static_cast<int>(points.size());

    Subtree out;
    out.point_order = points;
    out.point_dist_graph = Matrix(m);

    std::vector<char> in_tree(n, 0);
    std::vector<int> pos_of(n, -1);
    for (int i = 0; i < m; ++i) pos_of[points[i]] = i;

    auto add_path = [&](const std::vector<int>& path) {
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (!in_tree[path[i]]) {
                in_tree[path[i]] = 1;
                out.vertices.push_back(path[i]);
            }
            if (i > 0) {
                double len = 0.0;
                for (auto [v, w] : g.adjacency(path[i - 1])) {
                    if (v == path[i]) {
                        len = w;
                        break;
                    }
                }
                out.edges.push_back({path[i - 1], path[i], len});
            }
        }
    };

    // canonical geodesic between two vertices from a fresh shortest-path tree
    auto canonical = [&](int a, int b) {
        int s = std::min(a, b), t = std::max(a, b);
        SsspResult r = sssp(g, s);
        std::vector<int> path;
        for (int v = t; v != -1; v = r.pred[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;  // s..t
    };

    add_path(canonical(points[0], points[1]));

    for (int k = 1; k < m; ++k) {
        SsspResult r = sssp(g, points[k]);
        for (int j = 0; j < m; ++j) {
            out.point_dist_graph.at(k, j) = r.dist[points[j]];
            out.point_dist_graph.at(j, k) = r.dist[points[j]];
        }
        if (k == 1 || in_tree[points[k]]) continue;
        int nearest = -1;
        for (int v : out.vertices) {
            if (nearest < 0 || r.dist[v] < r.dist[nearest] ||
                (r.dist[v] == r.dist[nearest] && v < nearest)) {
                nearest = v;
            }
        }
        if (nearest == points[k]) continue;
        std::vector<int> path;
        if (points[k] < nearest) {
            // the sssp run from points[k] is already the canonical tree
            for (int v = nearest; v != -1; v = r.pred[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
        } else {
            path = canonical(nearest, points[k]);
        }
        // the only tree vertex on the path is the attachment point
        add_path(path);
    }
    // fill the first row of the distance table
    {
        SsspResult r = sssp(g, points[0]);
        for (int j = 0; j < m; ++j) {
            out.point_dist_graph.at(0, j) = r.dist[points[j]];
            out.point_dist_graph.at(j, 0) = r.dist[points[j]];
        }
    }

    if (out.edges.size() + 1 != out.vertices.size()) {
        throw Error("subtree approximation: attached paths did not form a tree");
    }

    // path metric of the subtree on the points
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < out.vertices.size(); ++i) local[out.vertices[i]] = static_cast<int>(i);
    std::vector<std::vector<std::pair<int, double>>> adj(out.vertices.size());
    for (const Edge& e : out.edges) {
        adj[local[e.u]].emplace_back(local[e.v], e.length);
        adj[local[e.v]].emplace_back(local[e.u], e.length);
    }
    out.point_dist_tree = Matrix(m);
    std::vector<double> dist(out.vertices.size());
    for (int i = 0; i < m; ++i) {
        // single-source distances on a tree by DFS
        std::fill(dist.begin(), dist.end(), -1.0);
        int s = local[points[i]];
        dist[s] = 0.0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, w] : adj[u]) {
                if (dist[v] < 0.0) {
                    dist[v] = dist[u] + w;
                    stack.push_back(v);
                }
            }
        }
        for (int j = 0; j < m; ++j) out.point_dist_tree.at(i, j) = dist[local[points[j]]];
    }

    DistortionReport& r = out.report;
    r.image_dominates = true;
    r.max_additive = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            double dg = out.point_dist_graph.at(i, j);
            double dt = out.point_dist_tree.at(i, j);
            if (dt < dg - kTol) throw Error("subtree approximation: tree metric below graph metric");
            if (dt - dg > r.max_additive) {
                r.max_additive = dt - dg;
                r.witness = {points[i], points[j], dg, dt};
            }
        }
    }
    r.additive_C = r.max_additive;
    return out;
}

SubsetCertificate finite_subset_certificate(const ShortestPaths& sp,
                                            const std::vector<std::vector<int>>& samples,
                                            double budget, double tol) {
    if (samples.empty()) throw Error("certificate: no samples");
    SubsetCertificate out;
    out.budget = budget;
    const Matrix& d = sp.dist;
    for (const std::vector<int>& z : samples) {
        SubsetCertificate::Sample s;
        s.z = z;

        // upper bound: best restriction of an end tree rooted inside Z
        s.upper = std::numeric_limits<double>::infinity();
        for (int x0 : z) {
            Matrix bgp = bottleneck_gromov_products(d, x0);
            double worst = 0.0;
            for (std::size_t i = 0; i < z.size(); ++i) {
                for (std::size_t j = i + 1; j < z.size(); ++j) {
                    double dxy = d.at(z[i], z[j]);
                    double img = d.at(x0, z[i]) + d.at(x0, z[j]) - 2.0 * bgp.at(z[i], z[j]);
                    worst = std::max(worst, dxy - img);
                }
            }
            if (worst < s.upper) {
                s.upper = worst;
                s.upper_basepoint = x0;
            }
        }

        // lower bound: four-point defect of Z under d, over 6
        double defect = 0.0;
        for (int w : z) {
            for (int x : z) {
                for (int y : z) {
                    for (int v : z) {
                        double gxy = gromov_product(d, w, x, y);
                        double gyv = gromov_product(d, w, y, v);
                        double gxv = gromov_product(d, w, x, v);
                        double def = std::min(gxy, gyv) - gxv;
                        if (def > defect) {
                            defect = def;
                            s.defect_witness[0] = w;
                            s.defect_witness[1] = x;
                            s.defect_witness[2] = y;
                            s.defect_witness[3] = v;
                        }
                    }
                }
            }
        }
        s.lower = defect / 6.0;
        if (s.lower > s.upper + tol) throw Error("certificate: lower bound exceeds upper bound");
        s.pass = s.upper <= budget + tol;
        out.pass = out.pass && s.pass;
        out.samples.push_back(std::move(s));
    }
    return out;
}

}  // namespace quasitree
