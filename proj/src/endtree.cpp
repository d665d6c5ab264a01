#include "quasitree/endtree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "quasitree/kernels.hpp"

namespace quasitree {

Matrix bottleneck_gromov_products(const Matrix& d, int x0) {
    const int n = d.size();
    Matrix gp = gromov_matrix(d, x0);
    std::vector<int> parent;
    std::vector<double> pw;
    max_spanning_tree_complete(gp, parent, pw);
    std::vector<double> diag(n);
    for (int v = 0; v < n; ++v) diag[v] = gp.at(v, v);  // (x,x)' = d(x0,x)
    return tree_minimax_values(parent, pw, diag);
}

GromovTable gromov_table(const Matrix& d, int x0) {
    GromovTable t;
    t.basepoint = x0;
    t.gp = gromov_matrix(d, x0);
    t.bgp = bottleneck_gromov_products(d, x0);
    return t;
}

Matrix dprime_from_bgp(const Matrix& d, const Matrix& bgp, int x0) {
    const int n = d.size();
    Matrix dp(n);
    const double* h = d.row(x0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            dp.at(x, y) = h[x] + h[y] - 2.0 * bgp.at(x, y);
        }
        dp.at(x, x) = 0.0;
    }
    return dp;
}

Matrix dprime_metric(const Matrix& d, int x0) {
    return dprime_from_bgp(d, bottleneck_gromov_products(d, x0), x0);
}

Quotient quotient_classes(const Matrix& d, const Matrix& dprime, int x0, double tol) {
    const int n = d.size();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int v) {
        while (rep[v] != v) {
            rep[v] = rep[rep[v]];
            v = rep[v];
        }
        return v;
    };
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (dprime.at(x, y) <= tol) {
                int a = find(x), b = find(y);
                if (a != b) rep[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    // non-transitivity check: every intra-class pair must itself be <= tol
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (find(x) == find(y) && dprime.at(x, y) > tol) {
                throw Error("quotient: tolerance-induced non-transitive merge on pair (" +
                            std::to_string(x) + ", " + std::to_string(y) + "); d' = " +
                            format9(dprime.at(x, y)));
            }
        }
    }

    Quotient q;
    q.class_of.assign(n, -1);
    // basepoint class first, remaining classes by smallest member
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        if (find(v) == v) roots.push_back(v);
    }
    std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) {
        bool ab = (a == find(x0)), bb = (b == find(x0));
        if (ab != bb) return ab;
        return a < b;
    });
    q.members.resize(roots.size());
    for (std::size_t c = 0; c < roots.size(); ++c) {
        for (int v = 0; v < n; ++v) {
            if (find(v) == roots[c]) {
                q.class_of[v] = static_cast<int>(c);
                q.members[c].push_back(v);
            }
        }
    }
    const int k = static_cast<int>(roots.size());
    q.height.resize(k);
    for (int c = 0; c < k; ++c) {
        double h = d.at(x0, q.members[c][0]);
        for (int v : q.members[c]) {
            if (std::fabs(d.at(x0, v) - h) > tol) {
                throw Error("quotient: class members at different heights (vertices " +
                            std::to_string(q.members[c][0]) + ", " + std::to_string(v) + ")");
            }
        }
        q.height[c] = h;
    }
    q.dstar = Matrix(k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            q.dstar.at(a, b) = a == b ? 0.0 : dprime.at(q.members[a][0], q.members[b][0]);
        }
    }
    return q;
}

int RealTree::meet(int a, int b) const {
    while (a != b) {
        if (depth_[a] < depth_[b]) {
            b = parent_[b];
        } else if (depth_[b] < depth_[a]) {
            a = parent_[a];
        } else {
            a = parent_[a];
            b = parent_[b];
        }
    }
    return a;
}

double RealTree::meet_height(int a, int b) const { return height_[meet(a, b)]; }

double RealTree::distance(int a, int b) const {
    return height_[a] + height_[b] - 2.0 * meet_height(a, b);
}

std::string RealTree::node_label(int node, const std::vector<std::string>& vertex_names) const {
    if (is_class_node(node)) return vertex_names[members_[node][0]];
    return "b" + std::to_string(node);
}

void RealTree::finalize() {
    const int n = node_count();
    children_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (parent_[v] >= 0) children_[parent_[v]].push_back(v);
    }
    // depths by repeated relaxation over parent links (no node order guarantee)
    depth_.assign(n, 0);
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int c : children_[u]) stack.push_back(c);
    }
    if (static_cast<int>(order.size()) != n) throw Error("real tree: not connected");
    for (int u : order) {
        if (parent_[u] >= 0) depth_[u] = depth_[parent_[u]] + 1;
    }
}

RealTree build_dendrogram(const std::vector<double>& heights, const Matrix& meet,
                          const std::vector<std::vector<int>>& members, double tol) {
    const int k = static_cast<int>(heights.size());
    RealTree t;
    t.height_ = heights;
    t.parent_.assign(k, -1);
    t.members_ = members;

    struct MergePair {
        double h;
        int a, b;
    };
    std::vector<MergePair> pairs;
    pairs.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) pairs.push_back({meet.at(a, b), a, b});
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const MergePair& p, const MergePair& q) {
        if (p.h != q.h) return p.h > q.h;
        if (p.a != q.a) return p.a < q.a;
        return p.b < q.b;
    });

    std::vector<int> rep(k);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int v) {
        while (rep[v] != v) {
            rep[v] = rep[rep[v]];
            v = rep[v];
        }
        return v;
    };
    std::vector<int> comp_root(k);  // component -> current tree root node
    std::iota(comp_root.begin(), comp_root.end(), 0);

    for (const MergePair& p : pairs) {
        int ca = find(p.a), cb = find(p.b);
        if (ca == cb) continue;
        int ra = comp_root[ca], rb = comp_root[cb];
        double ha = t.height_[ra], hb = t.height_[rb];
        if (p.h > ha + tol || p.h > hb + tol) {
            throw Error("dendrogram: merge height " + format9(p.h) +
                        " above component root heights " + format9(ha) + ", " + format9(hb));
        }
        int join;
        bool reuse_a = std::fabs(ha - p.h) <= tol;
        bool reuse_b = std::fabs(hb - p.h) <= tol;
        if (reuse_a && reuse_b) {
            // prefer a class node, then the smaller node id
            bool ca_cls = !t.members_[ra].empty();
            bool cb_cls = !t.members_[rb].empty();
            if (ca_cls != cb_cls) {
                join = ca_cls ? ra : rb;
            } else {
                join = std::min(ra, rb);
            }
            int other = join == ra ? rb : ra;
            t.parent_[other] = join;
        } else if (reuse_a) {
            join = ra;
            t.parent_[rb] = join;
        } else if (reuse_b) {
            join = rb;
            t.parent_[ra] = join;
        } else {
            join = static_cast<int>(t.height_.size());
            t.height_.push_back(p.h);
            t.parent_.push_back(-1);
            t.members_.emplace_back();
            t.parent_[ra] = join;
            t.parent_[rb] = join;
        }
        rep[std::max(ca, cb)] = std::min(ca, cb);
        comp_root[find(ca)] = join;
    }

    int root = comp_root[find(0)];
    t.root_ = root;
    if (t.parent_[root] != -1 || std::fabs(t.height_[root]) > tol) {
        throw Error("dendrogram: root is not at height 0");
    }
    t.finalize();
    return t;
}

namespace {

// four-point condition of the class metric, exact over all quadruples
void verify_dstar_zero_hyperbolic(const Quotient& q, double tol, int fourpoint_limit,
                                  int threads = 0) {
    const int k = q.dstar.size();
    if (k <= fourpoint_limit) {
        FourPointDelta fp = four_point_delta(q.dstar, threads);
        if (fp.delta > tol) {
            throw Error("end tree: d* fails the four-point condition, delta = " +
                        format9(fp.delta));
        }
        return;
    }
    // larger instances: triple inequality of the meets at the basepoint class
    Matrix m(k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) m.at(a, b) = 0.5 * (q.height[a] + q.height[b] - q.dstar.at(a, b));
    }
    if (triple_chain_defect(m, threads) > tol) {
        throw Error("end tree: meet heights fail the chain inequality");
    }
}

}  // namespace

EndTree build_end_tree(const Matrix& d, int x0, double tol, int fourpoint_limit) {
    EndTree t;
    t.basepoint = x0;
    t.bgp = bottleneck_gromov_products(d, x0);
    Matrix dp = dprime_from_bgp(d, t.bgp, x0);
    t.quotient = quotient_classes(d, dp, x0, tol);
    const Quotient& q = t.quotient;
    const int k = static_cast<int>(q.members.size());

    verify_dstar_zero_hyperbolic(q, tol, fourpoint_limit);

    // meet heights between classes are the bottleneck products of representatives
    Matrix meet(k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            meet.at(a, b) = a == b ? q.height[a] : t.bgp.at(q.members[a][0], q.members[b][0]);
        }
    }
    RealTree tree = build_dendrogram(q.height, meet, q.members, tol);
    for (int c = 0; c < k; ++c) {
        if (!tree.is_class_node(c)) throw Error("end tree: class node lost its members");
    }
    // entrywise realization of d*
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            double dt = tree.distance(a, b);
            if (std::fabs(dt - q.dstar.at(a, b)) > 1e-7) {
                throw Error("end tree: tree distance deviates from d* on classes (" +
                            std::to_string(a) + ", " + std::to_string(b) + "): " +
                            format9(dt) + " vs " + format9(q.dstar.at(a, b)));
            }
        }
    }
    t.tree = std::move(tree);
    return t;
}

DistortionReport end_map_report(const ShortestPaths& sp, const EndTree& t, double tol) {
    const Matrix& d = sp.dist;
    const int n = d.size();
    DistortionReport r;
    r.max_additive = -std::numeric_limits<double>::infinity();
    double max_ratio = 1.0;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            double dxy = d.at(x, y);
            double img = t.dstar(x, y);
            if (img > dxy + tol) {
                throw Error("end map: d* exceeds d on a pair");
            }
            double err = dxy - img;
            if (err > r.max_additive) {
                r.max_additive = err;
                r.witness = {x, y, dxy, img};
            }
            if (img > 0.0) max_ratio = std::max(max_ratio, dxy / img);
        }
    }
    if (n < 2) r.max_additive = 0.0;
    r.additive_C = std::max(0.0, r.max_additive);
    r.best_L = max_ratio;
    r.best_C = 0.0;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            double img = t.dstar(x, y);
            if (img == 0.0) r.best_C = std::max(r.best_C, d.at(x, y) / max_ratio);
        }
    }

    // exactness on every canonical geodesic from the basepoint
    r.geodesic_isometry = true;
    r.geodesic_max_deviation = 0.0;
    const int x0 = t.basepoint;
    for (int z = 0; z < n; ++z) {
        if (z == x0) continue;
        std::vector<int> path = sp.geodesic(x0, z);
        for (int v : path) {
            double dev = std::fabs(t.dstar(v, z) - d.at(v, z));
            r.geodesic_max_deviation = std::max(r.geodesic_max_deviation, dev);
            if (dev > tol) r.geodesic_isometry = false;
        }
    }
    return r;
}

ComponentOracleResult component_sup_radius(const MetricGraph& g, const Matrix& d, int x0,
                                           int x, int y) {
    std::vector<double> weight(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) weight[v] = d.at(x0, v);
    VertexMaximin m = maximin_vertex_path(g, weight, x, y);
    ComponentOracleResult out;
    out.sigma = m.value;
    out.witness_path = std::move(m.path);
    return out;
}

double visual_distance(const EndTree& t, int x, int y, double a) {
    if (!(a > 1.0)) throw Error("visual distance: parameter a must exceed 1");
    int cx = t.quotient.class_of[x];
    int cy = t.quotient.class_of[y];
    if (cx == cy) {
        throw Error("visual distance: vertices collapse to the same class");
    }
    return std::pow(a, -t.tree.meet_height(cx, cy));
}

}  // namespace quasitree
