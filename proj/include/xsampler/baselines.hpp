#pragma once

#include <vector>

#include "xsampler/signal_model.hpp"

namespace xs {

enum class BaselineMethod { fourier, shannon };

struct BaselineReport {
    BaselineMethod method = BaselineMethod::fourier;
    int sample_count = 0;
    SampledSignal reconstruction;
    double error_bound = 0.0;
    double measured_error = 0.0;
};

/// Truncated Fourier series on the support interval: coefficients f_hat(l/beta)
/// for |l| <= L0, partial sum on the grid. The tail bound is evaluated on a
/// 4x wider coefficient window as a proxy for the l > L0 spectral sum.
BaselineReport fourier_truncated(const SampledSignal& f, int L0);

/// Sinc interpolation from pointwise samples f(k / Omega2), |k| <= K0 with K0
/// the largest integer below Omega2 * beta / 2. If pulse_supports is non-empty,
/// only samples falling inside one of the [lo, hi] intervals are taken
/// (known-locations variant).
BaselineReport shannon_interp(const SampledSignal& f, double Omega2,
                              const std::vector<std::pair<double, double>>&
                                  pulse_supports = {});

/// sin(x)/x with the removable singularity handled explicitly.
double sinc(double x);

}  // namespace xs
