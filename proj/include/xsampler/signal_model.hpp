#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "xsampler/grid.hpp"

namespace xs {

enum class PulseShape { bspline2, bspline4, cosine, custom };

struct PulseSpec {
    PulseShape shape = PulseShape::cosine;
    double width = 0.0;       // full support width, seconds
    double center = 0.0;      // seconds
    double amplitude = 1.0;   // peak value
    // Lookup table for custom pulses, sampled uniformly over the support.
    std::vector<double> table;
};

struct ModelParams {
    int N = 0;              // pulse count
    double W = 0.0;         // max pulse width, seconds
    double beta = 0.0;      // signal support, seconds
    double Omega = 0.0;     // essential band, Hz
    double eps_Omega = 0.0; // essential-bandlimit tolerance
};

/// Closed-form pulse evaluation at time t (relative to the pulse's own center).
double pulse_value(const PulseSpec& p, double t);

/// Draws N pulse centers (uniform over the admissible interval, rejecting
/// overlap unless allow_overlap) and sums the pulses on the grid.
/// Shapes/widths/amplitudes are taken from `shapes`, cycled if N exceeds its
/// length. Deterministic for a fixed seed.
SampledSignal generate_multipulse(const GridSpec& grid, const ModelParams& params,
                                  const std::vector<PulseSpec>& shapes,
                                  std::uint64_t seed, bool allow_overlap = false);

/// Centers actually used by the last construction are sometimes needed by
/// callers (known-locations baselines); this variant reports them.
SampledSignal generate_multipulse(const GridSpec& grid, const ModelParams& params,
                                  const std::vector<PulseSpec>& shapes,
                                  std::uint64_t seed, bool allow_overlap,
                                  std::vector<PulseSpec>& placed);

/// Fraction of signal energy outside [-Omega/2, Omega/2], computed from the
/// Fourier coefficients of the grid interval: sqrt(max(0, ||f||^2 - E_in)) / ||f||.
double tail_energy_fraction(const SampledSignal& f, double Omega);

/// Adds white Gaussian noise on [-beta/2, beta/2], rescaled so the empirical
/// SNR is exactly snr_db. snr_db = +inf returns f unchanged.
SampledSignal add_noise(const SampledSignal& f, double snr_db, std::uint64_t seed);

/// Uniform mid-tread quantization of real and imaginary parts independently,
/// 2^bits levels spanning [-max|.|, +max|.|] of each part.
Eigen::MatrixXcd quantize_matrix(const Eigen::MatrixXcd& X, int bits);

/// ||f - f_hat||_2 / ||f||_2 by grid quadrature; grids must match.
double relative_error(const SampledSignal& f, const SampledSignal& f_hat);

}  // namespace xs
