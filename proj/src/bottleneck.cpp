#include "quasitree/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "quasitree/endtree.hpp"
#include "quasitree/gromov.hpp"
#include "quasitree/kernels.hpp"

namespace quasitree {

VertexMaximin widest_avoidance(const MetricGraph& g, const Matrix& d, int x, int y, int z) {
    std::vector<double> weight(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) weight[v] = d.at(z, v);
    return maximin_vertex_path(g, weight, x, y);
}

BottleneckConstant bottleneck_constant(const MetricGraph& g, const ShortestPaths& sp,
                                       bool all_geodesics, int threads, double tol) {
    const int n = g.vertex_count();
    const Matrix& d = sp.dist;

    // one maximin index per center z, built up front
    std::vector<std::unique_ptr<VertexMaximinIndex>> index(n);
    parallel_for(n, threads, [&](int z) {
        std::vector<double> weight(n);
        for (int v = 0; v < n; ++v) weight[v] = d.at(z, v);
        index[z] = std::make_unique<VertexMaximinIndex>(g, weight);
    });

    BottleneckConstant best;
    best.Delta = -1.0;
    std::vector<int> zs;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            zs.clear();
            if (all_geodesics) {
                double dxy = d.at(x, y);
                for (int v = 0; v < n; ++v) {
                    if (d.at(x, v) + d.at(v, y) <= dxy + tol) zs.push_back(v);
                }
            } else {
                zs = sp.geodesic(x, y);
                std::sort(zs.begin(), zs.end());
            }
            for (int z : zs) {
                double value = index[z]->query(x, y);
                if (value > best.Delta) {
                    best.Delta = value;
                    best.witness.x = x;
                    best.witness.y = y;
                    best.witness.z = z;
                }
            }
        }
    }
    if (best.Delta < 0.0) {  // single vertex
        best.Delta = 0.0;
        best.witness = {0, 0, 0, {0}};
        return best;
    }
    VertexMaximin m = widest_avoidance(g, d, best.witness.x, best.witness.y, best.witness.z);
    best.Delta = m.value;
    best.witness.path = std::move(m.path);
    return best;
}

ChainDefect chain_defect_at(const Matrix& d, const BgpProvider& bgp, int x0) {
    const int n = d.size();
    Matrix gp = gromov_matrix(d, x0);
    Matrix bg = bgp(x0);
    ChainDefect out;
    out.A = -std::numeric_limits<double>::infinity();
    out.witness.x0 = x0;
    for (int x = 0; x < n; ++x) {
        double gap = kernels::max_difference(bg.row(x), gp.row(x), n);
        if (gap > out.A) {
            out.A = gap;
            out.witness.x = x;
        }
    }
    const int x = out.witness.x;
    for (int y = 0; y < n; ++y) {
        if (bg.at(x, y) - gp.at(x, y) == out.A) {
            out.witness.y = y;
            break;
        }
    }
    out.A = std::max(0.0, out.A);
    return out;
}

ChainDefect chain_defect(const Matrix& d, const BgpProvider& bgp, int threads) {
    const int n = d.size();
    std::vector<ChainDefect> per_base(n);
    parallel_for(n, threads, [&](int x0) { per_base[x0] = chain_defect_at(d, bgp, x0); });
    ChainDefect best = per_base[0];
    for (int x0 = 1; x0 < n; ++x0) {
        if (per_base[x0].A > best.A) best = per_base[x0];
    }
    return best;
}

BottleneckReport certify_quasi_tree(const MetricGraph& g, const ShortestPaths& sp,
                                    const CertifyOptions& opt) {
    const Matrix& d = sp.dist;
    const int n = d.size();
    BottleneckReport r;

    BottleneckConstant bc = bottleneck_constant(g, sp, opt.all_geodesics, opt.threads);
    r.delta_bn = bc.Delta;
    r.witness = bc.witness;

    BgpProvider provider = [&](int x0) { return bottleneck_gromov_products(d, x0); };
    ChainDefect cd = opt.single_basepoint ? chain_defect_at(d, provider, 0)
                                          : chain_defect(d, provider, opt.threads);
    r.A = cd.A;
    r.A_witness = cd.witness;

    FourPointDelta fp;
    if (n > opt.delta_sample_cutoff) {
        fp = four_point_delta_sampled(d, opt.delta_sample_bases, opt.seed, opt.threads);
        r.delta_sampled = true;
    } else {
        fp = four_point_delta(d, opt.threads);
    }
    r.delta_4pt = fp.delta;
    r.delta_witness[0] = fp.w;
    r.delta_witness[1] = fp.x;
    r.delta_witness[2] = fp.y;
    r.delta_witness[3] = fp.z;

    r.budget = opt.budget;
    r.pass = opt.budget < 0.0 || r.delta_bn <= opt.budget;
    return r;
}

}  // namespace quasitree
