#pragma once

#include <cstddef>
#include <vector>

namespace quasitree {

// Dense square matrix of doubles, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n, double fill = 0.0) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}

    int size() const { return n_; }

    double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    double* row(int i) { return a_.data() + static_cast<std::size_t>(i) * n_; }
    const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }

    bool operator==(const Matrix& o) const = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

}  // namespace quasitree
