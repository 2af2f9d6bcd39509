#include "xsampler/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace xs {

Eigen::MatrixXd bernoulli_matrix(int M, int K, std::uint64_t seed,
                                 bool allow_oversampled) {
    if (M < 1) throw std::invalid_argument("bernoulli_matrix: M must be >= 1");
    if (M > K && !allow_oversampled)
        throw std::invalid_argument("bernoulli_matrix: M > K without oversampled flag");
    std::mt19937_64 rng(seed);
    Eigen::MatrixXd C(M, K);
    for (int m = 0; m < M; ++m)
        for (int k = 0; k < K; ++k)
            C(m, k) = (rng() & 1ull) ? 1.0 : -1.0;
    return C;
}

MeasurementEnsemble make_ensemble(const GaborFrame& frame, const LatticeExtent& extent,
                                  int M, std::uint64_t seed, bool identity,
                                  bool allow_oversampled) {
    MeasurementEnsemble ens;
    ens.frame = frame;
    ens.extent = extent;
    ens.M = M;
    ens.seed = seed;
    if (identity) {
        if (M != extent.K())
            throw std::invalid_argument("make_ensemble: identity needs M == K");
        ens.C = Eigen::MatrixXd::Identity(M, extent.K());
    } else {
        ens.C = bernoulli_matrix(M, extent.K(), seed, allow_oversampled);
    }
    return ens;
}

Eigen::VectorXcd waveform(const MeasurementEnsemble& ens, int m, int l,
                          const GridSpec& grid) {
    if (m < 0 || m >= ens.M || std::abs(l) > ens.extent.L0)
        throw std::out_of_range("waveform: channel index out of range");
    Eigen::VectorXcd p(grid.n_points);
    const double two_pi_bl = -2.0 * M_PI * ens.frame.b * l;
    for (int i = 0; i < grid.n_points; ++i) {
        const double t = grid.t(i);
        double mix = 0.0;
        // only window shifts overlapping t contribute
        const double half = 0.5 * ens.frame.g.support_alpha;
        int k_lo = std::max(-ens.extent.K0,
                            static_cast<int>(std::ceil((t - half) / ens.frame.a - 1e-12)));
        int k_hi = std::min(ens.extent.K0,
                            static_cast<int>(std::floor((t + half) / ens.frame.a + 1e-12)));
        for (int k = k_lo; k <= k_hi; ++k)
            mix += ens.C(m, k + ens.extent.K0) * ens.frame.g(t - ens.frame.a * k);
        p(i) = mix * std::complex<double>(std::cos(two_pi_bl * t), std::sin(two_pi_bl * t));
    }
    return p;
}

SampleMatrix acquire(const SampledSignal& f, const MeasurementEnsemble& ens) {
    const GridSpec& grid = f.grid;
    const LatticeExtent& e = ens.extent;
    const double beta = f.support_beta;
    const int i0 = grid.index_ceil(-0.5 * beta);
    const int i1 = grid.index_floor(0.5 * beta);
    const int n = i1 - i0 + 1;
    if (n < 2) throw std::invalid_argument("acquire: grid does not cover the support");

    SampleMatrix out;
    out.X = Eigen::MatrixXcd::Zero(ens.M, e.L());

    const double half = 0.5 * ens.frame.g.support_alpha;
    Eigen::VectorXd mix(n);
    for (int m = 0; m < ens.M; ++m) {
        for (int i = 0; i < n; ++i) {
            const double t = grid.t(i0 + i);
            double s = 0.0;
            int k_lo = std::max(-e.K0, static_cast<int>(std::ceil((t - half) / ens.frame.a - 1e-12)));
            int k_hi = std::min(e.K0, static_cast<int>(std::floor((t + half) / ens.frame.a + 1e-12)));
            for (int k = k_lo; k <= k_hi; ++k)
                s += ens.C(m, k + e.K0) * ens.frame.g(t - ens.frame.a * k);
            mix(i) = f.values(i0 + i) * s;
        }
        // full end weights (f vanishes at +-beta/2); see analyze()
        for (int l = -e.L0; l <= e.L0; ++l) {
            std::complex<double> x(0.0, 0.0);
            const double w0 = -2.0 * M_PI * ens.frame.b * l;
            for (int i = 0; i < n; ++i) {
                const double ph = w0 * grid.t(i0 + i);
                x += mix(i) * std::complex<double>(std::cos(ph), std::sin(ph));
            }
            out.X(m, l + e.L0) = x * grid.dt;
        }
    }
    return out;
}

SampleMatrix acquire_fast(const CoefficientGrid& Zg, const MeasurementEnsemble& ens) {
    if (ens.C.cols() != Zg.Z.rows())
        throw std::invalid_argument("acquire_fast: dimension mismatch");
    SampleMatrix out;
    out.X = ens.C * Zg.Z;
    return out;
}

double FilterRepresentation::s_block(const MeasurementEnsemble& ens, int m,
                                     double t) const {
    const double half = 0.5 * ens.frame.g.support_alpha;
    const LatticeExtent& e = ens.extent;
    int k_lo = std::max(-e.K0, static_cast<int>(std::ceil((t - half) / ens.frame.a - 1e-12)));
    int k_hi = std::min(e.K0, static_cast<int>(std::floor((t + half) / ens.frame.a + 1e-12)));
    double s = 0.0;
    for (int k = k_lo; k <= k_hi; ++k)
        s += ens.C(m, k + e.K0) * ens.frame.g(t - ens.frame.a * k);
    return s;
}

double FilterRepresentation::s(const MeasurementEnsemble& ens, double t) const {
    double v = 0.0;
    for (int m = 0; m < ens.M; ++m) v += s_block(ens, m, t + tau * m);
    return v;
}

FilterRepresentation filter_representation(const MeasurementEnsemble& ens) {
    FilterRepresentation fr;
    fr.theta = ens.frame.b;
    fr.tau = ens.frame.g.support_alpha * ens.extent.K();
    return fr;
}

SampleMatrix filter_samples(const SampledSignal& f, const MeasurementEnsemble& ens) {
    const FilterRepresentation fr = filter_representation(ens);
    const GridSpec& grid = f.grid;
    const LatticeExtent& e = ens.extent;
    const double beta = f.support_beta;
    const int i0 = grid.index_ceil(-0.5 * beta);
    const int i1 = grid.index_floor(0.5 * beta);
    const int n = i1 - i0 + 1;

    SampleMatrix out;
    out.X = Eigen::MatrixXcd::Zero(ens.M, e.L());

    // x_m[l] = (e^{-2 pi i b l t} f * s(-.))(tau m)
    //        = integral f(t) e^{-2 pi i b l t} s(t - tau m) dt,
    // with the composite filter evaluated in full (all blocks).
    Eigen::VectorXd sv(n);
    for (int m = 0; m < ens.M; ++m) {
        for (int i = 0; i < n; ++i)
            sv(i) = f.values(i0 + i) * fr.s(ens, grid.t(i0 + i) - fr.tau * m);
        for (int l = -e.L0; l <= e.L0; ++l) {
            std::complex<double> x(0.0, 0.0);
            const double w0 = -2.0 * M_PI * ens.frame.b * l;
            for (int i = 0; i < n; ++i) {
                const double ph = w0 * grid.t(i0 + i);
                x += sv(i) * std::complex<double>(std::cos(ph), std::sin(ph));
            }
            out.X(m, l + e.L0) = x * grid.dt;
        }
    }
    return out;
}

}  // namespace xs
