#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "sgl/errors.hpp"

namespace sgl {

inline double metric_inf() { return std::numeric_limits<double>::infinity(); }

// Square matrix of pairwise distances. Infinity is a first-class value (cross
// component graph distances); it propagates through sums and is never treated
// as zero.
class MetricMatrix {
public:
    MetricMatrix() = default;
    explicit MetricMatrix(int k, double fill = 0.0) : k_(k), d_(static_cast<std::size_t>(k) * k, fill) {
        if (k < 1) throw parameter_error("MetricMatrix: point count must be >= 1");
        for (int i = 0; i < k; ++i) at(i, i) = 0.0;
    }

    int size() const { return k_; }

    double& at(int i, int j) { return d_[static_cast<std::size_t>(i) * k_ + j]; }
    double at(int i, int j) const { return d_[static_cast<std::size_t>(i) * k_ + j]; }

    void set(int i, int j, double v) {
        at(i, j) = v;
        at(j, i) = v;
    }

    bool all_finite() const {
        for (double v : d_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    // Symmetry, zero diagonal, nonnegativity, triangle inequality over finite
    // triples. O(k^3); meant for small k and test assertions.
    void validate(double tol = 1e-9) const {
        for (int i = 0; i < k_; ++i) {
            if (at(i, i) != 0.0) throw parameter_error("MetricMatrix: nonzero diagonal");
            for (int j = 0; j < k_; ++j) {
                if (at(i, j) != at(j, i)) throw parameter_error("MetricMatrix: asymmetric");
                if (at(i, j) < 0.0) throw parameter_error("MetricMatrix: negative distance");
            }
        }
        for (int i = 0; i < k_; ++i)
            for (int l = 0; l < k_; ++l)
                for (int j = 0; j < k_; ++j) {
                    const double via = at(i, l) + at(l, j);
                    if (std::isfinite(via) && at(i, j) > via + tol)
                        throw parameter_error("MetricMatrix: triangle inequality violated");
                }
    }

    MetricMatrix scaled(double c) const {
        MetricMatrix m(*this);
        for (double& v : m.d_) v *= c;
        return m;
    }

    // Restriction to a subset of points, in the given order.
    MetricMatrix restrict(const std::vector<int>& points) const {
        MetricMatrix m(static_cast<int>(points.size()));
        for (std::size_t a = 0; a < points.size(); ++a)
            for (std::size_t b = 0; b < points.size(); ++b)
                m.at(static_cast<int>(a), static_cast<int>(b)) = at(points[a], points[b]);
        return m;
    }

private:
    int k_ = 0;
    std::vector<double> d_;
};

} // namespace sgl
