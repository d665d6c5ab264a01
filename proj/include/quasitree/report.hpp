#pragma once

#include <string>
#include <vector>

namespace quasitree {

struct BoundCheck {
    std::string name;
    double value = 0.0;
    bool satisfied = false;
};

struct PairError {
    int x = 0, y = 0;
    double d = 0.0;        // source distance
    double image_d = 0.0;  // distance between images
};

// Additive/multiplicative distortion of a map between finite metric spaces.
// For non-expanding maps additive errors are d - image_d >= 0; when
// image_dominates is set (subtree approximation) they are image_d - d >= 0.
struct DistortionReport {
    bool image_dominates = false;
    double max_additive = 0.0;
    PairError witness;
    double best_L = 1.0;   // smallest multiplicative constant over non-collapsed pairs
    double best_C = 0.0;   // residual additive constant at best_L
    double additive_C = 0.0;  // two-sided additive constant at L = 1
    std::vector<BoundCheck> bounds;
    bool all_bounds_satisfied = true;

    // op-specific extras
    bool geodesic_isometry = false;       // exact on every canonical geodesic from x0
    double geodesic_max_deviation = 0.0;
    double surjectivity_radius = 0.0;
    std::vector<PairError> pairs;         // populated on request only

    void add_bound(const std::string& name, double bound, double measured, double tol) {
        bool ok = measured <= bound + tol;
        bounds.push_back({name, bound, ok});
        all_bounds_satisfied = all_bounds_satisfied && ok;
    }
};

struct QuasiIsometryReport {
    double L = 1.0;          // always 1; C is the two-sided additive constant
    double C = 0.0;
    double frontier_L = 1.0; // smallest multiplicative fit over non-collapsed pairs
    double frontier_C = 0.0; // residual additive constant at frontier_L
    PairError worst_pair;
    double surjectivity_radius = 0.0;
    bool one_sided = false;  // map never expands distances
};

struct BottleneckWitness {
    int x = 0, y = 0, z = 0;
    std::vector<int> path;
};

struct ChainDefectWitness {
    int x0 = 0, x = 0, y = 0;
};

struct BottleneckReport {
    double delta_bn = 0.0;  // Manning bottleneck constant
    BottleneckWitness witness;
    double A = 0.0;  // chain defect
    ChainDefectWitness A_witness;
    double delta_4pt = 0.0;
    int delta_witness[4] = {0, 0, 0, 0};
    bool delta_sampled = false;
    double budget = -1.0;  // negative: no budget given
    bool pass = true;
};

}  // namespace quasitree
