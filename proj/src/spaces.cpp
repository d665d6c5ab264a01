#include "quasitree/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace quasitree {

namespace {

constexpr double kGridTol = 1e-9;

bool near_integer(double x) { return std::fabs(x - std::round(x)) <= kGridTol; }

int as_steps(double extent, double spacing, const char* what) {
    double q = extent / spacing;
    if (!near_integer(q)) {
        throw Error(std::string("degenerate spacing: ") + what + " is not a multiple of it");
    }
    return static_cast<int>(std::round(q));
}

std::string grid_name(const std::string& prefix, int i, int j) {
    return prefix + std::to_string(i) + "_" + std::to_string(j);
}

// octile edges of one rectangular grid; names prefix<i>_<j>
void add_grid(GraphBuilder& b, const std::string& prefix, int cols, int rows, double spacing,
              const std::vector<double>& label_head) {
    for (int i = 0; i <= cols; ++i) {
        for (int j = 0; j <= rows; ++j) {
            std::vector<double> label = label_head;
            label.push_back(i * spacing);
            label.push_back(j * spacing);
            b.add_vertex(grid_name(prefix, i, j), std::move(label));
        }
    }
    const double diag = spacing * std::sqrt(2.0);
    for (int i = 0; i <= cols; ++i) {
        for (int j = 0; j <= rows; ++j) {
            if (i + 1 <= cols) b.add_edge(grid_name(prefix, i, j), grid_name(prefix, i + 1, j), spacing);
            if (j + 1 <= rows) b.add_edge(grid_name(prefix, i, j), grid_name(prefix, i, j + 1), spacing);
            if (i + 1 <= cols && j + 1 <= rows) {
                b.add_edge(grid_name(prefix, i, j), grid_name(prefix, i + 1, j + 1), diag);
            }
            if (i + 1 <= cols && j - 1 >= 0) {
                b.add_edge(grid_name(prefix, i, j), grid_name(prefix, i + 1, j - 1), diag);
            }
        }
    }
}

}  // namespace

MetricGraph gen_strip(double n, double spacing) {
    if (!(spacing > 0.0) || spacing > 0.5) throw Error("degenerate spacing: need 0 < spacing <= 0.5");
    if (!(n > 0.0)) throw Error("strip length must be positive");
    int cols = as_steps(1.0, spacing, "width 1");
    int rows = as_steps(n, spacing, "length n");
    GraphBuilder b;
    add_grid(b, "g", cols, rows, spacing, {});
    return std::move(b).build();
}

std::vector<int> strip_zigzag_points(const MetricGraph& strip) {
    if (!strip.has_labels()) throw Error("zigzag order needs coordinate labels");
    double max_y = 0.0;
    for (int v = 0; v < strip.vertex_count(); ++v) {
        max_y = std::max(max_y, strip.label(v)[1]);
    }
    std::vector<int> points;
    for (int y = 0;; ++y) {
        if (y > max_y + kGridTol) break;
        double tx = (y % 2 == 0) ? 0.0 : 1.0;
        int found = -1;
        for (int v = 0; v < strip.vertex_count(); ++v) {
            const auto& l = strip.label(v);
            if (std::fabs(l[0] - tx) <= kGridTol && std::fabs(l[1] - y) <= kGridTol) {
                found = v;
                break;
            }
        }
        if (found < 0) break;
        points.push_back(found);
    }
    return points;
}

MetricGraph gen_comb(int teeth, double tooth_length) {
    if (teeth < 1) throw Error("comb: need at least one tooth");
    if (!(tooth_length > 0.0)) throw Error("comb: tooth length must be positive");
    // attachment positions, ascending: 0, 1/teeth, ..., 1/2, 1
    std::vector<double> attach{0.0};
    for (int k = teeth; k >= 1; --k) attach.push_back(1.0 / k);

    GraphBuilder b;
    for (std::size_t i = 0; i < attach.size(); ++i) {
        b.add_vertex("sp" + std::to_string(i), {attach[i], 0.0});
    }
    for (std::size_t i = 0; i + 1 < attach.size(); ++i) {
        b.add_edge("sp" + std::to_string(i), "sp" + std::to_string(i + 1),
                   attach[i + 1] - attach[i]);
    }
    int nseg = std::max(1, static_cast<int>(std::ceil(tooth_length)));
    double step = tooth_length / nseg;
    for (std::size_t i = 0; i < attach.size(); ++i) {
        std::string prev = "sp" + std::to_string(i);
        for (int j = 1; j <= nseg; ++j) {
            std::string name = "t" + std::to_string(i) + "_" + std::to_string(j);
            b.add_vertex(name, {attach[i], j * step});
            b.add_edge(prev, name, step);
            prev = name;
        }
    }
    return std::move(b).build();
}

RectTree gen_rect_tree(int depth, double resolution) {
    if (depth < 1) throw Error("rectangle tree: depth must be positive");
    if (depth > 6) throw Error("rectangle tree: size guard, depth must be <= 6");
    if (!(resolution > 0.0) || !near_integer(1.0 / resolution)) {
        throw Error("rectangle tree: resolution must divide 1");
    }

    struct Rect {
        int id;
        int level;
    };
    RectTree out;
    out.midpoints_by_depth.assign(depth, {});
    GraphBuilder b;

    // side midpoint name of rect r: side 0 = south (towards the root), 1 =
    // north, 2 = west, 3 = east
    auto side_vertex = [&](int rect, int level, int side) {
        double hgt = std::pow(2.0, level + 1);
        int cols = static_cast<int>(std::round(2.0 / resolution));
        int rows = static_cast<int>(std::round(hgt / resolution));
        std::string prefix = "r" + std::to_string(rect) + "_";
        switch (side) {
            case 0: return grid_name(prefix, cols / 2, 0);
            case 1: return grid_name(prefix, cols / 2, rows);
            case 2: return grid_name(prefix, 0, rows / 2);
            default: return grid_name(prefix, cols, rows / 2);
        }
    };
    auto add_rect = [&](int id, int level) {
        double hgt = std::pow(2.0, level + 1);
        int cols = static_cast<int>(std::round(2.0 / resolution));
        int rows = static_cast<int>(std::round(hgt / resolution));
        add_grid(b, "r" + std::to_string(id) + "_", cols, rows, resolution,
                 {static_cast<double>(id)});
    };

    int next_id = 0;
    std::queue<Rect> frontier;
    add_rect(next_id, 0);
    frontier.push({next_id++, 0});
    while (!frontier.empty()) {
        Rect r = frontier.front();
        frontier.pop();
        if (r.level == depth) continue;
        // the root grows from all four sides, every other rectangle from the
        // three sides away from its parent
        std::vector<int> sides = r.id == 0 ? std::vector<int>{0, 1, 2, 3}
                                           : std::vector<int>{1, 2, 3};
        for (int side : sides) {
            int child = next_id++;
            add_rect(child, r.level + 1);
            std::string mid = "m" + std::to_string(child);
            b.add_vertex(mid, {static_cast<double>(child), -1.0, -1.0});
            b.add_edge(side_vertex(r.id, r.level, side), mid, 0.5);
            b.add_edge(mid, side_vertex(child, r.level + 1, 0), 0.5);
            out.midpoints_by_depth[r.level].push_back(mid);
            frontier.push({child, r.level + 1});
        }
    }
    out.graph = std::move(b).build();
    return out;
}

std::vector<int> RectTree::yn_points(int n) const {
    if (n < 1 || n > static_cast<int>(midpoints_by_depth.size())) {
        throw Error("rectangle tree: Y_n depth out of range");
    }
    std::vector<int> pts;
    for (int k = 0; k < n; ++k) {
        for (const std::string& name : midpoints_by_depth[k]) {
            pts.push_back(graph.vertex(name));
        }
    }
    return pts;
}

MetricGraph gen_random_tree(int n, std::uint64_t seed, double max_len) {
    if (n < 1) throw Error("random tree: need at least one vertex");
    if (!(max_len > 0.0)) throw Error("random tree: max_len must be positive");
    Rng rng(seed);
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
    for (int i = 1; i < n; ++i) {
        int parent = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)));
        double len = max_len * (1.0 - rng.next_double());
        b.add_edge(i, parent, len);
    }
    return std::move(b).build();
}

MetricGraph perturb_metric(const MetricGraph& g, double epsilon, std::uint64_t seed) {
    if (epsilon < 0.0) throw Error("perturbation: epsilon must be nonnegative");
    if (g.edge_count() > 0 && epsilon >= g.min_edge_length()) {
        throw Error("perturbation: epsilon too large, must stay below the minimum edge length");
    }
    Rng rng(seed);
    GraphBuilder b;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<double> label = g.label(v);
        b.add_vertex(g.name(v), std::move(label));
    }
    for (const Edge& e : g.edges()) {
        double factor = 1.0 + epsilon * rng.next_double();
        b.add_edge(e.u, e.v, e.length * factor);
    }
    return std::move(b).build();
}

QuasiIsometryReport qi_report(const std::vector<int>& f, const Matrix& dx, const Matrix& dy) {
    const int n = dx.size();
    if (static_cast<int>(f.size()) != n) throw Error("qi report: map is not total");
    QuasiIsometryReport r;
    r.one_sided = true;
    double ratio = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double a = dx.at(i, j);
            double b = dy.at(f[i], f[j]);
            double viol = std::fabs(b - a);
            if (viol > r.C) {
                r.C = viol;
                r.worst_pair = {i, j, a, b};
            }
            if (b > a + kTol) r.one_sided = false;
            if (a > 0.0 && b > 0.0) ratio = std::max({ratio, a / b, b / a});
        }
    }
    r.L = 1.0;
    r.frontier_L = ratio;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double a = dx.at(i, j);
            double b = dy.at(f[i], f[j]);
            double need = std::max({a / ratio - b, b - ratio * a, 0.0});
            r.frontier_C = std::max(r.frontier_C, need);
        }
    }
    const int m = dy.size();
    for (int y = 0; y < m; ++y) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) nearest = std::min(nearest, dy.at(y, f[i]));
        r.surjectivity_radius = std::max(r.surjectivity_radius, nearest);
    }
    return r;
}

}  // namespace quasitree
