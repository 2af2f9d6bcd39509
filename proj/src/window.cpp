#include "xsampler/window.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace xs {

namespace {
double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
}  // namespace

double bspline(int order, double t) {
    if (order < 1) throw std::invalid_argument("bspline: order must be >= 1");
    const double half = 0.5 * order;
    // order 1: half-open box so integer tilings cover each point exactly once
    if (order == 1) return (t >= -half && t < half) ? 1.0 : 0.0;
    if (std::abs(t) >= half) return 0.0;
    // Divided-difference form: B_n(t) = 1/(n-1)! sum_j (-1)^j C(n,j) (t + n/2 - j)_+^{n-1}
    double s = 0.0;
    for (int j = 0; j <= order; ++j) {
        double u = t + half - j;
        if (u <= 0.0) break;
        double term = binom(order, j) * std::pow(u, order - 1);
        s += (j % 2 == 0) ? term : -term;
    }
    return s / factorial(order - 1);
}

Window cosine_window(double W) {
    if (W <= 0.0) throw std::invalid_argument("cosine_window: W must be positive");
    Window w;
    w.support_alpha = W;
    w.evaluator = [W](double t) { return std::cos(M_PI * t / W); };
    return w;
}

Window box_window(double W) {
    if (W <= 0.0) throw std::invalid_argument("box_window: W must be positive");
    Window w;
    w.support_alpha = W;
    w.evaluator = [](double) { return 1.0; };
    return w;
}

Window gaussian_window(double support) {
    Window w;
    w.support_alpha = support;
    w.evaluator = [](double t) { return std::exp(-M_PI * t * t); };
    return w;
}

Window window_from_h(const std::function<double(double)>& h, double mu, double W) {
    if (!(mu >= 0.5 && mu < 1.0))
        throw std::invalid_argument("window_from_h: mu must lie in [1/2, 1)");
    if (W <= 0.0) throw std::invalid_argument("window_from_h: W must be positive");
    // Monotonicity / boundary check on a sample of [0,1].
    double prev = h(0.0);
    if (std::abs(prev) > 1e-9 || std::abs(h(1.0) - 1.0) > 1e-9)
        throw std::invalid_argument("window_from_h: h must satisfy h(0)=0, h(1)=1");
    for (int i = 1; i <= 256; ++i) {
        double v = h(i / 256.0);
        if (v < prev - 1e-9)
            throw std::invalid_argument("window_from_h: h must be nondecreasing");
        prev = v;
    }

    const double lambda = 2.0 * mu - 1.0;
    Window w;
    w.support_alpha = W;
    w.evaluator = [h, mu, W, lambda](double t) {
        double at = std::abs(t);
        if (at > 0.5 * W) return 0.0;
        if (at <= 0.5 * W * lambda) return 1.0;
        if (t < 0.0) return std::sqrt(std::max(0.0, h((t / W + 0.5) / (1.0 - mu))));
        return std::sqrt(std::max(0.0, 1.0 - h((t / W - 0.5 * lambda) / (1.0 - mu))));
    };
    return w;
}

double trapezoid_g_profile(double t) {
    double at = std::abs(t);
    if (at >= 2.0 / 3.0) return 0.0;
    if (at <= 1.0 / 3.0) return 1.0;
    return 2.0 - 3.0 * at;
}

double trapezoid_gamma_profile(double t) {
    double at = std::abs(t);
    if (at >= 2.0 / 3.0) return 0.0;
    if (at <= 1.0 / 3.0) return 1.0;
    return -18.0 * at * at + 15.0 * at - 2.0;
}

}  // namespace xs
