#pragma once

#include <functional>

#include "xsampler/grid.hpp"

namespace xs {

/// Compactly supported window: evaluator is a closed-form function of t that
/// vanishes for |t| > support_alpha/2.
struct Window {
    double support_alpha = 0.0;
    std::function<double(double)> evaluator;

    // Half-open support [-alpha/2, alpha/2) so that integer tilings of a box
    // window cover each point exactly once.
    double operator()(double t) const {
        if (t < -0.5 * support_alpha || t >= 0.5 * support_alpha) return 0.0;
        return evaluator(t);
    }

    Eigen::VectorXd sample(const GridSpec& grid) const {
        Eigen::VectorXd v(grid.n_points);
        for (int i = 0; i < grid.n_points; ++i) v(i) = (*this)(grid.t(i));
        return v;
    }
};

/// Centered cardinal B-spline of order n, supported on [-n/2, n/2].
/// B_1 is the unit box, B_{n+1} = B_n * B_1.
double bspline(int order, double t);

/// g(t) = cos(pi t / W) on |t| <= W/2, zero elsewhere.
Window cosine_window(double W);

/// Box window of width W (B-spline of order 1 dilated).
Window box_window(double W);

/// Truncated unit Gaussian exp(-pi t^2); used as the reference atom for
/// time-frequency norm estimates and as a sanity oracle.
Window gaussian_window(double support = 12.0);

/// Window built from a monotone profile h on [0,1] (h=0 left, h=1 right):
/// rises on [-W/2, -W lambda/2], plateau 1 on |t| <= W lambda/2, falls
/// symmetrically, with lambda = 2 mu - 1. The resulting frame with a = mu W,
/// b = 1/W is tight.
Window window_from_h(const std::function<double(double)>& h, double mu, double W);

/// Piecewise-linear trapezoid profile on [-2/3, 2/3] (partition of unity with
/// shift 1) and its published polynomial dual profile.
double trapezoid_g_profile(double t);
double trapezoid_gamma_profile(double t);

}  // namespace xs
