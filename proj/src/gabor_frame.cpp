#include "xsampler/gabor_frame.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace xs {

namespace {

// In-place iterative radix-2 FFT (size must be a power of two).
void fft(std::vector<std::complex<double>>& a) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = a[i + j];
                std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// S(t) = sum_k |g(t - a k)|^2; only finitely many k overlap.
double s_of_t(const Window& g, double a, double t) {
    const double half = 0.5 * g.support_alpha;
    const int k_lo = static_cast<int>(std::ceil((t - half) / a - 1e-12));
    const int k_hi = static_cast<int>(std::floor((t + half) / a + 1e-12));
    double s = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        double v = g(t - a * k);
        s += v * v;
    }
    return s;
}

}  // namespace

std::pair<double, double> frame_bounds(const Window& g, double a, int grid_points) {
    if (a <= 0.0) throw std::invalid_argument("frame_bounds: a must be positive");
    if (a > g.support_alpha * (1.0 + 1e-12))
        throw std::invalid_argument("frame_bounds: painless case needs a <= alpha");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        double s = s_of_t(g, a, a * i / grid_points);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (lo <= 1e-9) throw std::runtime_error("frame_bounds: lower bound vanishes, not a frame");
    return {lo, hi};
}

Window canonical_dual(const Window& g, double a, double b) {
    frame_bounds(g, a);  // propagate "not a frame"
    Window d;
    d.support_alpha = g.support_alpha;
    d.evaluator = [g, a, b](double t) { return b * g(t) / s_of_t(g, a, t); };
    return d;
}

std::pair<double, double> essential_band(const Window& g, double eps_B_target) {
    if (!(eps_B_target > 0.0 && eps_B_target < 1.0))
        throw std::invalid_argument("essential_band: eps target must be in (0,1)");
    const double alpha = g.support_alpha;
    const double T = std::max(16.0 * alpha, 2.0 * alpha);  // analysis period with padding
    const int n = 2048;
    const double dt = alpha / n;

    std::vector<double> gs(n + 1);
    double energy = 0.0;
    for (int i = 0; i <= n; ++i) {
        gs[i] = g(-0.5 * alpha + i * dt);
        double w = (i == 0 || i == n) ? 0.5 : 1.0;
        energy += w * gs[i] * gs[i];
    }
    energy *= dt;
    if (energy <= 0.0) throw std::invalid_argument("essential_band: zero window");

    const int l_cap = static_cast<int>(0.4 / dt * T);  // stay below grid Nyquist
    double e_in = 0.0;
    for (int l = 0; l <= l_cap; ++l) {
        std::complex<double> c(0.0, 0.0);
        const double w0 = -2.0 * M_PI * l / T;
        for (int i = 0; i <= n; ++i) {
            double w = (i == 0 || i == n) ? 0.5 : 1.0;
            double t = -0.5 * alpha + i * dt;
            c += w * gs[i] * std::complex<double>(std::cos(w0 * t), std::sin(w0 * t));
        }
        c *= dt;
        e_in += (l == 0 ? 1.0 : 2.0) * std::norm(c) / T;
        double tail = std::sqrt(std::max(0.0, energy - e_in) / energy);
        if (tail <= eps_B_target) return {2.0 * l / T, tail};
    }
    return {2.0 * l_cap / T, std::sqrt(std::max(0.0, energy - e_in) / energy)};
}

double s0_norm_estimate(const Window& w) {
    const double alpha = w.support_alpha;
    const size_t n_fft = 16384;
    const size_t n_sup = 4096;  // samples across supp w, zero-padded 4x
    const double dt = alpha / static_cast<double>(n_sup);
    const double dw = 1.0 / (dt * static_cast<double>(n_fft));

    // Gaussian reference atom phi(t) = exp(-pi t^2); negligible beyond |t| > 3.
    const double x_lo = -0.5 * alpha - 3.0;
    const double x_hi = 0.5 * alpha + 3.0;
    const double dx = std::min(alpha / 16.0, 0.1);
    const int n_x = static_cast<int>(std::ceil((x_hi - x_lo) / dx));

    std::vector<std::complex<double>> buf(n_fft);
    double total = 0.0;
    for (int ix = 0; ix < n_x; ++ix) {
        const double x = x_lo + (ix + 0.5) * dx;
        std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
        bool any = false;
        for (size_t i = 0; i < n_sup; ++i) {
            double t = -0.5 * alpha + (static_cast<double>(i) + 0.5) * dt;
            double u = t - x;
            double v = w(t) * std::exp(-M_PI * u * u);
            if (v != 0.0) any = true;
            buf[i] = v;
        }
        if (!any) continue;
        fft(buf);
        double row = 0.0;
        for (size_t k = 0; k < n_fft; ++k) row += std::abs(buf[k]);
        total += row * dt * dx;  // dt from the time quadrature of V, sum over all FFT bins
    }
    return total * dw;
}

FrameConstants frame_constants(const GaborFrame& frame) {
    FrameConstants c;
    c.C_ab = std::sqrt((1.0 + 1.0 / frame.a) * (1.0 + 1.0 / frame.b));
    c.s0_g = s0_norm_estimate(frame.g);
    c.s0_gamma = s0_norm_estimate(frame.gamma);
    c.C0_tilde = c.C_ab * c.C_ab * c.s0_gamma * c.s0_g;
    return c;
}

GaborFrame make_frame(const Window& g, double mu, double band_eps) {
    // mu = 1 (a = alpha) is the boundary orthogonal-tiling case and is still
    // painless; redundancy requires mu < 1 but construction does not
    if (!(mu > 0.0 && mu <= 1.0))
        throw std::invalid_argument("make_frame: mu must lie in (0,1]");
    GaborFrame f;
    f.g = g;
    f.mu = mu;
    f.a = mu * g.support_alpha;
    f.b = 1.0 / g.support_alpha;
    auto [a1, a2] = frame_bounds(g, f.a);
    f.A1 = a1;
    f.A2 = a2;
    f.gamma = canonical_dual(g, f.a, f.b);
    auto [B, eps] = essential_band(g, band_eps);
    f.B = B;
    f.eps_B = eps;
    return f;
}

GaborFrame trapezoid_pair(double W) {
    if (W <= 0.0) throw std::invalid_argument("trapezoid_pair: W must be positive");
    const double mu = 0.75;
    const double scale = mu * W;
    const double b = 1.0 / W;

    Window g;
    g.support_alpha = W;
    g.evaluator = [scale](double t) { return trapezoid_g_profile(t / scale); };

    // The published dual profile pairs with g at (a, b) up to the b factor:
    // sum_k g(t-ak) gamma(t-ak) = b.
    Window gamma;
    gamma.support_alpha = W;
    gamma.evaluator = [scale, b](double t) { return b * trapezoid_gamma_profile(t / scale); };

    GaborFrame f;
    f.g = g;
    f.gamma = gamma;
    f.mu = mu;
    f.a = mu * W;
    f.b = b;
    auto [a1, a2] = frame_bounds(g, f.a);
    f.A1 = a1;
    f.A2 = a2;
    auto [B, eps] = essential_band(g, 0.1);
    f.B = B;
    f.eps_B = eps;
    return f;
}

GaborFrame bspline_window(int order, double W) {
    if (order < 1) throw std::invalid_argument("bspline_window: order must be >= 1");
    Window g;
    g.support_alpha = W;
    g.evaluator = [order, W](double t) { return bspline(order, t * order / W); };
    return make_frame(g, 1.0 / order);
}

GaborFrame cosine_frame(double W) { return make_frame(cosine_window(W), 0.5); }

}  // namespace xs
