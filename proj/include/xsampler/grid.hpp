#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace xs {

/// Uniform time grid t_i = t_start + i*dt, i = 0 .. n_points-1.
struct GridSpec {
    double t_start = 0.0;
    double t_end = 0.0;
    double dt = 0.0;
    int n_points = 0;

    static GridSpec regular(double t0, double t1, double dt) {
        if (dt <= 0.0 || t1 <= t0)
            throw std::invalid_argument("GridSpec: need dt > 0 and t_end > t_start");
        GridSpec g;
        g.t_start = t0;
        g.t_end = t1;
        g.dt = dt;
        g.n_points = static_cast<int>(std::lround((t1 - t0) / dt)) + 1;
        if (g.n_points < 2) throw std::invalid_argument("GridSpec: fewer than 2 points");
        return g;
    }

    double t(int i) const { return t_start + i * dt; }

    /// First grid index with t_i >= x (clamped to [0, n_points]).
    int index_ceil(double x) const {
        int i = static_cast<int>(std::ceil((x - t_start) / dt - 1e-12));
        return std::max(0, std::min(i, n_points));
    }
    /// Last grid index with t_i <= x (clamped to [-1, n_points-1]).
    int index_floor(double x) const {
        int i = static_cast<int>(std::floor((x - t_start) / dt + 1e-12));
        return std::max(-1, std::min(i, n_points - 1));
    }

    bool matches(const GridSpec& o, double tol = 1e-9) const {
        return n_points == o.n_points && std::abs(dt - o.dt) < tol &&
               std::abs(t_start - o.t_start) < tol;
    }
};

/// Real signal on a uniform grid, supported on [-support_beta/2, support_beta/2].
struct SampledSignal {
    GridSpec grid;
    Eigen::VectorXd values;
    double support_beta = 0.0;
};

/// Composite trapezoid rule over the whole vector.
inline double trapezoid(const Eigen::VectorXd& v, double dt) {
    if (v.size() < 2) return 0.0;
    return dt * (v.sum() - 0.5 * (v(0) + v(v.size() - 1)));
}

/// Trapezoid rule over index range [i0, i1] of f(index).
template <typename F>
double trapezoid_range(int i0, int i1, double dt, F&& f) {
    if (i1 <= i0) return 0.0;
    double s = 0.5 * (f(i0) + f(i1));
    for (int i = i0 + 1; i < i1; ++i) s += f(i);
    return dt * s;
}

inline double l2_norm(const SampledSignal& f) {
    return std::sqrt(trapezoid(f.values.array().square().matrix(), f.grid.dt));
}

}  // namespace xs
