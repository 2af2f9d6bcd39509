#pragma once

#include <complex>

#include "xsampler/gabor_frame.hpp"
#include "xsampler/grid.hpp"

namespace xs {

struct LatticeExtent {
    int K0 = 0;
    int L0 = 0;
    int K() const { return 2 * K0 + 1; }
    int L() const { return 2 * L0 + 1; }
};

/// K x L complex matrix of Gabor coefficients z_{k,l}; row r holds k = r - K0,
/// column c holds l = c - L0.
struct CoefficientGrid {
    Eigen::MatrixXcd Z;
    LatticeExtent extent;
};

/// Truncation extents: K0 = ceil((beta+W)/(2 W mu)) - 1 and
/// L0 = ceil((Omega+B) W / 2) - 1. A non-negative l0_override replaces the
/// formula value (used when reproducing reported simulation settings).
LatticeExtent lattice_extent(double beta, double Omega, double W, double mu,
                             double B, int l0_override = -1);

/// z_{k,l} = integral of f(t) conj(g(t - a k)) exp(-2 pi i b l t) dt
/// over the window support, by trapezoid quadrature.
CoefficientGrid analyze(const SampledSignal& f, const GaborFrame& frame,
                        const LatticeExtent& extent);

/// f(t) = Re sum_{k,l} z_{k,l} exp(2 pi i b l t) gamma(t - a k) on the grid.
/// If imag_residual is non-null it receives ||Im||/||Re|| of the complex sum.
SampledSignal synthesize(const CoefficientGrid& Zg, const GaborFrame& frame,
                         const GridSpec& grid, double beta,
                         double* imag_residual = nullptr);

/// Truncation error bound C0_tilde * (eps_Omega + eps_B) * ||f||.
double truncation_bound(const FrameConstants& constants, double eps_Omega,
                        double eps_B, double f_norm);

/// sum_k (sum_l |z_{k,l}|^2)^{1/2}.
double l21_norm(const Eigen::MatrixXcd& Z);

}  // namespace xs
