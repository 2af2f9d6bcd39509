#include "xsampler/baselines.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace xs {

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

namespace {

// f_hat(nu0 + j*step) for j = 0..count-1 over grid indices [i0, i1] by
// trapezoid quadrature, using a phasor recurrence across the frequency
// progression (drift ~ count * eps, negligible at these sizes).
std::vector<std::complex<double>> spectrum_progression(const SampledSignal& f,
                                                       int i0, int i1, double nu0,
                                                       double step, int count) {
    std::vector<std::complex<double>> out(count, std::complex<double>(0.0, 0.0));
    for (int i = i0; i <= i1; ++i) {
        const double w = (i == i0 || i == i1) ? 0.5 : 1.0;
        const double v = w * f.values(i);
        if (v == 0.0) continue;
        const double t = f.grid.t(i);
        std::complex<double> p = std::polar(1.0, -2.0 * M_PI * nu0 * t);
        const std::complex<double> q = std::polar(1.0, -2.0 * M_PI * step * t);
        for (int j = 0; j < count; ++j) {
            out[j] += v * p;
            p *= q;
        }
    }
    for (auto& c : out) c *= f.grid.dt;
    return out;
}

}  // namespace

BaselineReport fourier_truncated(const SampledSignal& f, int L0) {
    if (L0 < 0) throw std::invalid_argument("fourier_truncated: L0 must be >= 0");
    const double beta = f.support_beta;
    const GridSpec& grid = f.grid;
    const int i0 = grid.index_ceil(-0.5 * beta);
    const int i1 = grid.index_floor(0.5 * beta);

    const double f_norm = l2_norm(f);
    if (f_norm == 0.0)
        throw std::invalid_argument("fourier_truncated: zero signal");

    // c_l = (1/beta) f_hat(l/beta); computed out to 4 L0 for the tail proxy
    const int Lw = std::max(4 * L0, L0 + 1);
    auto c = spectrum_progression(f, i0, i1, -Lw / beta, 1.0 / beta, 2 * Lw + 1);
    for (auto& cl : c) cl /= beta;

    BaselineReport rep;
    rep.method = BaselineMethod::fourier;
    rep.sample_count = 2 * L0 + 1;

    rep.reconstruction.grid = grid;
    rep.reconstruction.support_beta = beta;
    rep.reconstruction.values = Eigen::VectorXd::Zero(grid.n_points);
    for (int i = i0; i <= i1; ++i) {
        const double t = grid.t(i);
        std::complex<double> s = c[Lw];
        std::complex<double> e = std::polar(1.0, 2.0 * M_PI * t / beta);
        std::complex<double> p = e;
        for (int l = 1; l <= L0; ++l) {
            s += c[Lw + l] * p + c[Lw - l] * std::conj(p);
            p *= e;
        }
        rep.reconstruction.values(i) = s.real();
    }

    rep.measured_error = relative_error(f, rep.reconstruction);

    // L-infinity tail bound sum_{|l|>L0} |c_l|, converted to a relative L2
    // bound over the interval via the sqrt(beta) interval-measure factor
    double tail = 0.0;
    for (int l = L0 + 1; l <= Lw; ++l)
        tail += std::abs(c[Lw + l]) + std::abs(c[Lw - l]);
    rep.error_bound = std::sqrt(beta) * tail / f_norm;
    return rep;
}

BaselineReport shannon_interp(const SampledSignal& f, double Omega2,
                              const std::vector<std::pair<double, double>>&
                                  pulse_supports) {
    if (Omega2 <= 0.0)
        throw std::invalid_argument("shannon_interp: Omega2 must be > 0");
    const double beta = f.support_beta;
    const GridSpec& grid = f.grid;
    const double f_norm = l2_norm(f);
    if (f_norm == 0.0) throw std::invalid_argument("shannon_interp: zero signal");

    // largest integer strictly below Omega2 * beta / 2
    const int K0 =
        std::max(0, static_cast<int>(std::ceil(Omega2 * beta / 2.0 - 1e-12)) - 1);

    std::vector<double> tk, fk;
    for (int k = -K0; k <= K0; ++k) {
        const double t = k / Omega2;
        if (!pulse_supports.empty()) {
            bool inside = false;
            for (const auto& [lo, hi] : pulse_supports)
                if (t >= lo && t <= hi) { inside = true; break; }
            if (!inside) continue;
        }
        // linear interpolation of the grid signal at the sample instant
        const int i = std::max(0, std::min(grid.n_points - 2, grid.index_floor(t)));
        const double frac = (t - grid.t(i)) / grid.dt;
        tk.push_back(t);
        fk.push_back((1.0 - frac) * f.values(i) + frac * f.values(i + 1));
    }

    BaselineReport rep;
    rep.method = BaselineMethod::shannon;
    rep.sample_count = static_cast<int>(tk.size());

    rep.reconstruction.grid = grid;
    rep.reconstruction.support_beta = beta;
    rep.reconstruction.values = Eigen::VectorXd::Zero(grid.n_points);
    const int i0 = grid.index_ceil(-0.5 * beta);
    const int i1 = grid.index_floor(0.5 * beta);
    for (int i = i0; i <= i1; ++i) {
        const double t = grid.t(i);
        double s = 0.0;
        for (std::size_t j = 0; j < tk.size(); ++j)
            s += fk[j] * sinc(M_PI * Omega2 * (t - tk[j]));
        rep.reconstruction.values(i) = s;
    }
    rep.measured_error = relative_error(f, rep.reconstruction);

    // aliasing bound: integral of |f_hat| outside [-Omega2/2, Omega2/2] up to
    // the grid Nyquist frequency, Riemann sum at the interval's natural
    // frequency resolution, as a relative L2 bound with the sqrt(beta) factor
    const double T = grid.t_end - grid.t_start;
    const double dnu = 1.0 / T;
    const int j0 = static_cast<int>(std::floor(0.5 * Omega2 / dnu)) + 1;
    const int j1 = static_cast<int>(std::floor(0.5 / grid.dt / dnu));
    double tail = 0.0;
    if (j1 >= j0) {
        auto pos = spectrum_progression(f, i0, i1, j0 * dnu, dnu, j1 - j0 + 1);
        auto neg = spectrum_progression(f, i0, i1, -j0 * dnu, -dnu, j1 - j0 + 1);
        for (std::size_t j = 0; j < pos.size(); ++j)
            tail += (std::abs(pos[j]) + std::abs(neg[j])) * dnu;
    }
    rep.error_bound = std::sqrt(beta) * tail / f_norm;
    return rep;
}

}  // namespace xs
