#include "xsampler/gabor_transform.hpp"

#include <cmath>
#include <stdexcept>

namespace xs {

LatticeExtent lattice_extent(double beta, double Omega, double W, double mu,
                             double B, int l0_override) {
    if (beta <= 0.0 || Omega <= 0.0 || W <= 0.0 || B < 0.0)
        throw std::invalid_argument("lattice_extent: parameters must be positive");
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("lattice_extent: mu must lie in (0,1)");
    LatticeExtent e;
    e.K0 = static_cast<int>(std::ceil((beta + W) / (2.0 * W * mu) - 1e-9)) - 1;
    e.L0 = l0_override >= 0
               ? l0_override
               : static_cast<int>(std::ceil((Omega + B) * W / 2.0 - 1e-9)) - 1;
    e.K0 = std::max(e.K0, 0);
    e.L0 = std::max(e.L0, 0);
    return e;
}

CoefficientGrid analyze(const SampledSignal& f, const GaborFrame& frame,
                        const LatticeExtent& extent) {
    const GridSpec& grid = f.grid;
    if (frame.b * grid.dt > 0.125)
        throw std::runtime_error("analyze: grid too coarse for the modulation rate");

    CoefficientGrid out;
    out.extent = extent;
    out.Z = Eigen::MatrixXcd::Zero(extent.K(), extent.L());

    const double half = 0.5 * frame.g.support_alpha;
    const double two_pi_b = 2.0 * M_PI * frame.b;

    for (int k = -extent.K0; k <= extent.K0; ++k) {
        const double shift = frame.a * k;
        const int i0 = std::max(0, grid.index_ceil(shift - half));
        const int i1 = std::min(grid.n_points - 1, grid.index_floor(shift + half));
        if (i1 <= i0) continue;
        const int n = i1 - i0 + 1;

        Eigen::VectorXd w(n);
        for (int i = 0; i < n; ++i) {
            double t = grid.t(i0 + i);
            w(i) = f.values(i0 + i) * frame.g(t - shift);
        }
        // full end weights: the integrand vanishes at the support boundary,
        // so this matches the trapezoid rule on the enclosing zero-padded
        // interval and keeps acquire() algebraically equal to C * analyze()

        for (int l = -extent.L0; l <= extent.L0; ++l) {
            std::complex<double> z(0.0, 0.0);
            const double w0 = -two_pi_b * l;
            for (int i = 0; i < n; ++i) {
                double ph = w0 * grid.t(i0 + i);
                z += w(i) * std::complex<double>(std::cos(ph), std::sin(ph));
            }
            out.Z(k + extent.K0, l + extent.L0) = z * grid.dt;
        }
    }
    return out;
}

SampledSignal synthesize(const CoefficientGrid& Zg, const GaborFrame& frame,
                         const GridSpec& grid, double beta, double* imag_residual) {
    const LatticeExtent& e = Zg.extent;
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(grid.n_points);
    const double half = 0.5 * frame.gamma.support_alpha;
    const double two_pi_b = 2.0 * M_PI * frame.b;

    for (int k = -e.K0; k <= e.K0; ++k) {
        const double shift = frame.a * k;
        const int i0 = std::max(0, grid.index_ceil(shift - half));
        const int i1 = std::min(grid.n_points - 1, grid.index_floor(shift + half));
        if (i1 < i0) continue;

        for (int i = i0; i <= i1; ++i) {
            const double t = grid.t(i);
            const double gv = frame.gamma(t - shift);
            if (gv == 0.0) continue;
            std::complex<double> s(0.0, 0.0);
            for (int l = -e.L0; l <= e.L0; ++l) {
                const double ph = two_pi_b * l * t;
                s += Zg.Z(k + e.K0, l + e.L0) *
                     std::complex<double>(std::cos(ph), std::sin(ph));
            }
            acc(i) += gv * s;
        }
    }

    if (imag_residual) {
        double re = acc.real().norm();
        double im = acc.imag().norm();
        *imag_residual = re > 0.0 ? im / re : im;
    }

    SampledSignal out;
    out.grid = grid;
    out.support_beta = beta;
    out.values = acc.real();
    return out;
}

double truncation_bound(const FrameConstants& constants, double eps_Omega,
                        double eps_B, double f_norm) {
    if (eps_Omega < 0.0 || eps_B < 0.0 || f_norm < 0.0)
        throw std::invalid_argument("truncation_bound: arguments must be non-negative");
    return constants.C0_tilde * (eps_Omega + eps_B) * f_norm;
}

double l21_norm(const Eigen::MatrixXcd& Z) {
    double s = 0.0;
    for (Eigen::Index r = 0; r < Z.rows(); ++r) s += Z.row(r).norm();
    return s;
}

}  // namespace xs
