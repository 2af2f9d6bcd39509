#pragma once

#include <utility>

#include "xsampler/window.hpp"

namespace xs {

/// Gabor frame generated by a compactly supported window g on the lattice
/// (a, b) with a = mu * alpha and b = 1/alpha (painless case). gamma is a dual
/// window normalized so that sum_k g(t-ak) gamma(t-ak) = b on the real line.
struct GaborFrame {
    Window g;
    Window gamma;
    double a = 0.0;   // time shift, seconds
    double b = 0.0;   // frequency shift, Hz
    double mu = 0.0;  // redundancy a*b
    double A1 = 0.0;  // ess inf of S(t) = sum_k |g(t-ak)|^2
    double A2 = 0.0;  // ess sup of S(t)
    double B = 0.0;      // window essential bandwidth (full width, Hz)
    double eps_B = 0.0;  // tail fraction achieved at B
};

struct FrameConstants {
    double C_ab = 0.0;      // (1+1/a)^{1/2} (1+1/b)^{1/2}
    double s0_g = 0.0;      // estimated S0 norm of g
    double s0_gamma = 0.0;  // estimated S0 norm of gamma
    double C0_tilde = 0.0;  // C_ab^2 * s0_gamma * s0_g
};

/// (A1, A2) = (min, max) of S(t) = sum_k |g(t-ak)|^2 over one period [0, a).
/// Valid for the painless pairing b = 1/alpha, a <= alpha. Throws if the
/// lower bound is numerically zero ("not a frame").
std::pair<double, double> frame_bounds(const Window& g, double a,
                                       int grid_points = 4096);

/// Canonical dual gamma(t) = b * g(t) / S(t) on supp g.
Window canonical_dual(const Window& g, double a, double b);

/// Smallest symmetric band [-B/2, B/2] with L2 spectral tail fraction of g
/// below eps_target. Returns (B, achieved tail fraction).
std::pair<double, double> essential_band(const Window& g, double eps_B_target);

/// Discretized Feichtinger-algebra norm estimate: Riemann sum of
/// |V_phi w(x, omega)| with a unit Gaussian phi over a truncated
/// time-frequency box, octave-banded in frequency with a decay-based tail
/// correction.
double s0_norm_estimate(const Window& w);

FrameConstants frame_constants(const GaborFrame& frame);

/// Frame from an arbitrary painless-case window: a = mu*alpha, b = 1/alpha,
/// bounds from frame_bounds, canonical dual, essential band at eps target.
GaborFrame make_frame(const Window& g, double mu, double band_eps = 0.1);

/// Dilated piecewise-linear window with its published (non-canonical)
/// polynomial dual; mu = 3/4, supported on [-W/2, W/2], bounds (1/2, 1).
GaborFrame trapezoid_pair(double W);

/// g(t) = B_N(t N / W), mu = 1/N, canonical dual; partition of unity with
/// shift a = W/N.
GaborFrame bspline_window(int order, double W);

/// Tight cosine frame, mu = 1/2.
GaborFrame cosine_frame(double W);

}  // namespace xs
