#include "quasitree/gromov.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "quasitree/common.hpp"
#include "quasitree/kernels.hpp"

namespace quasitree {

double gromov_product(const Matrix& d, int x0, int x, int y) {
    return 0.5 * (d.at(x0, x) + d.at(x0, y) - d.at(x, y));
}

void gromov_matrix_into(const Matrix& d, int x0, Matrix& out) {
    const int n = d.size();
    if (out.size() != n) out = Matrix(n);
    const double* base = d.row(x0);
    for (int x = 0; x < n; ++x) {
        const double* dx = d.row(x);
        double hx = base[x];
        double* row = out.row(x);
        for (int y = 0; y < n; ++y) {
            row[y] = 0.5 * (hx + base[y] - dx[y]);
        }
    }
}

Matrix gromov_matrix(const Matrix& d, int x0) {
    Matrix g;
    gromov_matrix_into(d, x0, g);
    return g;
}

namespace {

struct BaseScan {
    double defect = -std::numeric_limits<double>::infinity();
    int x = 0;
};

// Largest min{(x,y)_w,(y,z)_w} - (x,z)_w over x,y,z for one basepoint w.
// For each x the row H[z] = max_y min(G[x][y], G[y][z]) is streamed through
// the maximin kernel and compared against G[x][*] in one sweep.
BaseScan scan_basepoint(const Matrix& g, std::vector<double>& h) {
    const int n = g.size();
    BaseScan best;
    for (int x = 0; x < n; ++x) {
        std::fill(h.begin(), h.end(), -std::numeric_limits<double>::infinity());
        const double* gx = g.row(x);
        for (int y = 0; y < n; ++y) {
            kernels::maximin_update(h.data(), g.row(y), gx[y], n);
        }
        double defect = kernels::max_difference(h.data(), gx, n);
        if (defect > best.defect) {
            best.defect = defect;
            best.x = x;
        }
    }
    return best;
}

FourPointDelta finish_witness(const Matrix& d, const std::vector<int>& bases,
                              const std::vector<BaseScan>& scans) {
    // deterministic winner: first basepoint (in scan order) attaining the max
    int wi = 0;
    for (std::size_t i = 1; i < scans.size(); ++i) {
        if (scans[i].defect > scans[wi].defect) wi = static_cast<int>(i);
    }
    FourPointDelta out;
    out.w = bases[wi];
    out.x = scans[wi].x;
    Matrix g = gromov_matrix(d, out.w);
    const int n = d.size();
    const double* gx = g.row(out.x);
    double best = -std::numeric_limits<double>::infinity();
    for (int y = 0; y < n; ++y) {
        const double* gy = g.row(y);
        double cap = gx[y];
        for (int z = 0; z < n; ++z) {
            double defect = std::min(cap, gy[z]) - gx[z];
            if (defect > best) {
                best = defect;
                out.y = y;
                out.z = z;
            }
        }
    }
    out.delta = std::max(0.0, best);
    return out;
}

FourPointDelta delta_over_bases(const Matrix& d, const std::vector<int>& bases, int threads) {
    std::vector<BaseScan> scans(bases.size());
    parallel_for(static_cast<int>(bases.size()), threads, [&](int i) {
        thread_local Matrix g;
        thread_local std::vector<double> h;
        gromov_matrix_into(d, bases[i], g);
        h.resize(d.size());
        scans[i] = scan_basepoint(g, h);
    });
    return finish_witness(d, bases, scans);
}

}  // namespace

FourPointDelta four_point_delta(const Matrix& d, int threads) {
    const int n = d.size();
    std::vector<int> bases(n);
    for (int i = 0; i < n; ++i) bases[i] = i;
    return delta_over_bases(d, bases, threads);
}

double triple_chain_defect(const Matrix& m, int threads) {
    const int n = m.size();
    std::vector<double> per_x(n, -std::numeric_limits<double>::infinity());
    parallel_for(n, threads, [&](int x) {
        thread_local std::vector<double> h;
        h.assign(n, -std::numeric_limits<double>::infinity());
        const double* mx = m.row(x);
        for (int y = 0; y < n; ++y) {
            kernels::maximin_update(h.data(), m.row(y), mx[y], n);
        }
        per_x[x] = kernels::max_difference(h.data(), mx, n);
    });
    double best = -std::numeric_limits<double>::infinity();
    for (double v : per_x) best = std::max(best, v);
    return best;
}

FourPointDelta four_point_delta_sampled(const Matrix& d, int bases, std::uint64_t seed,
                                        int threads) {
    const int n = d.size();
    if (bases >= n) return four_point_delta(d, threads);
    Rng rng(seed);
    std::vector<char> used(n, 0);
    std::vector<int> pick;
    pick.reserve(bases);
    while (static_cast<int>(pick.size()) < bases) {
        int b = static_cast<int>(rng.next_below(n));
        if (!used[b]) {
            used[b] = 1;
            pick.push_back(b);
        }
    }
    std::sort(pick.begin(), pick.end());
    return delta_over_bases(d, pick, threads);
}

}  // namespace quasitree
