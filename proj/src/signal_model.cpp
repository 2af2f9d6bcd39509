#include "xsampler/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "xsampler/window.hpp"

namespace xs {

double pulse_value(const PulseSpec& p, double t) {
    if (std::abs(t) > 0.5 * p.width) return 0.0;
    switch (p.shape) {
        case PulseShape::bspline2:
            // dilated so the support is exactly `width`, scaled to unit peak
            return p.amplitude * bspline(2, 2.0 * t / p.width) / bspline(2, 0.0);
        case PulseShape::bspline4:
            return p.amplitude * bspline(4, 4.0 * t / p.width) / bspline(4, 0.0);
        case PulseShape::cosine:
            return p.amplitude * std::cos(M_PI * t / p.width);
        case PulseShape::custom: {
            if (p.table.size() < 2) return 0.0;
            double u = (t / p.width + 0.5) * (p.table.size() - 1);
            int i = std::clamp(static_cast<int>(std::floor(u)), 0,
                               static_cast<int>(p.table.size()) - 2);
            double w = u - i;
            return p.amplitude * ((1.0 - w) * p.table[i] + w * p.table[i + 1]);
        }
    }
    return 0.0;
}

SampledSignal generate_multipulse(const GridSpec& grid, const ModelParams& params,
                                  const std::vector<PulseSpec>& shapes,
                                  std::uint64_t seed, bool allow_overlap,
                                  std::vector<PulseSpec>& placed) {
    if (params.N < 0) throw std::invalid_argument("generate_multipulse: N < 0");
    if (params.N > 0 && shapes.empty())
        throw std::invalid_argument("generate_multipulse: no pulse shapes given");
    if (!allow_overlap && params.N * params.W > params.beta)
        throw std::runtime_error("generate_multipulse: N*W > beta, disjoint placement infeasible");

    std::mt19937_64 rng(seed);
    placed.clear();
    placed.reserve(params.N);

    const int max_attempts = 20000;
    int attempts = 0;
    for (int n = 0; n < params.N; ++n) {
        PulseSpec p = shapes[n % shapes.size()];
        if (p.width > params.W + 1e-12)
            throw std::invalid_argument("generate_multipulse: pulse wider than W");
        std::uniform_real_distribution<double> dist(-(params.beta - p.width) / 2.0,
                                                    (params.beta - p.width) / 2.0);
        while (true) {
            if (++attempts > max_attempts)
                throw std::runtime_error("generate_multipulse: placement rejection limit hit");
            double c = dist(rng);
            bool ok = true;
            if (!allow_overlap) {
                for (const auto& q : placed) {
                    if (std::abs(c - q.center) < 0.5 * (p.width + q.width)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                p.center = c;
                placed.push_back(p);
                break;
            }
        }
    }

    SampledSignal f;
    f.grid = grid;
    f.support_beta = params.beta;
    f.values = Eigen::VectorXd::Zero(grid.n_points);
    for (const auto& p : placed) {
        int i0 = grid.index_ceil(p.center - 0.5 * p.width);
        int i1 = grid.index_floor(p.center + 0.5 * p.width);
        for (int i = std::max(0, i0); i <= std::min(grid.n_points - 1, i1); ++i)
            f.values(i) += pulse_value(p, grid.t(i) - p.center);
    }
    return f;
}

SampledSignal generate_multipulse(const GridSpec& grid, const ModelParams& params,
                                  const std::vector<PulseSpec>& shapes,
                                  std::uint64_t seed, bool allow_overlap) {
    std::vector<PulseSpec> placed;
    return generate_multipulse(grid, params, shapes, seed, allow_overlap, placed);
}

double tail_energy_fraction(const SampledSignal& f, double Omega) {
    const double norm = l2_norm(f);
    if (norm <= 0.0)
        throw std::runtime_error("tail_energy_fraction: zero signal, ratio undefined");
    const GridSpec& g = f.grid;
    const double T = g.t_end - g.t_start;  // analysis period of the grid interval
    const double nyquist = 0.5 / g.dt;
    if (0.5 * Omega > nyquist * (1.0 + 1e-9))
        throw std::invalid_argument("tail_energy_fraction: band exceeds grid Nyquist");

    // In-band energy from the Fourier coefficients c_l = fhat(l/T); Parseval
    // on the interval gives ||f||^2 = (1/T) sum_l |c_l|^2.
    const int l_max = static_cast<int>(std::floor(0.5 * Omega * T + 1e-9));
    double e_in = 0.0;
    for (int l = -l_max; l <= l_max; ++l) {
        std::complex<double> c(0.0, 0.0);
        const double w0 = -2.0 * M_PI * l / T;
        for (int i = 0; i < g.n_points; ++i) {
            double wt = (i == 0 || i == g.n_points - 1) ? 0.5 : 1.0;
            double ph = w0 * g.t(i);
            c += wt * f.values(i) * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        c *= g.dt;
        e_in += std::norm(c) / T;
    }
    double tail_sq = std::max(0.0, norm * norm - e_in);
    return std::sqrt(tail_sq) / norm;
}

SampledSignal add_noise(const SampledSignal& f, double snr_db, std::uint64_t seed) {
    if (std::isinf(snr_db)) return f;
    const double fnorm = l2_norm(f);
    if (fnorm <= 0.0) throw std::invalid_argument("add_noise: zero signal");

    SampledSignal out = f;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const int i0 = f.grid.index_ceil(-0.5 * f.support_beta);
    const int i1 = f.grid.index_floor(0.5 * f.support_beta);
    Eigen::VectorXd n = Eigen::VectorXd::Zero(f.grid.n_points);
    for (int i = i0; i <= i1; ++i) n(i) = gauss(rng);

    const double nnorm = std::sqrt(trapezoid(n.array().square().matrix(), f.grid.dt));
    const double target = fnorm * std::pow(10.0, -snr_db / 20.0);
    out.values += (target / nnorm) * n;
    return out;
}

Eigen::MatrixXcd quantize_matrix(const Eigen::MatrixXcd& X, int bits) {
    if (bits < 1) throw std::invalid_argument("quantize_matrix: bits must be >= 1");
    const long levels = 1L << bits;

    auto quantize_part = [&](const Eigen::MatrixXd& P) {
        double mx = P.cwiseAbs().maxCoeff();
        if (mx == 0.0) return P;
        double step = 2.0 * mx / static_cast<double>(levels - 1);
        Eigen::MatrixXd Q(P.rows(), P.cols());
        for (Eigen::Index j = 0; j < P.cols(); ++j)
            for (Eigen::Index i = 0; i < P.rows(); ++i) {
                long idx = std::lround((P(i, j) + mx) / step);
                idx = std::clamp(idx, 0L, levels - 1);
                Q(i, j) = -mx + idx * step;
            }
        return Q;
    };

    Eigen::MatrixXd re = quantize_part(X.real());
    Eigen::MatrixXd im = quantize_part(X.imag());
    return re.cast<std::complex<double>>() +
           std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
}

double relative_error(const SampledSignal& f, const SampledSignal& f_hat) {
    if (!f.grid.matches(f_hat.grid))
        throw std::invalid_argument("relative_error: grid mismatch");
    const double fnorm = l2_norm(f);
    if (fnorm <= 0.0) throw std::invalid_argument("relative_error: zero reference signal");
    Eigen::VectorXd d = f.values - f_hat.values;
    return std::sqrt(trapezoid(d.array().square().matrix(), f.grid.dt)) / fnorm;
}

}  // namespace xs
