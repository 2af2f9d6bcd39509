#pragma once

// Shared fixtures: the reference scenario (3 pulses of width 0.13 s on a
// [-4.5, 4.5] grid) and a few cut-down variants that keep the slow
// channel-integration tests fast.

#include <vector>

#include "xsampler/experiments.hpp"

namespace xs::testing {

inline std::vector<PulseSpec> scenario_shapes(double W = 0.13) {
    return {
        {PulseShape::bspline2, W, 0.0, 1.0, {}},
        {PulseShape::bspline4, W, 0.0, 1.0, {}},
        {PulseShape::cosine, W, 0.0, 1.0, {}},
    };
}

inline ModelParams scenario_params() { return {3, 0.13, 8.0, 20.0, 0.1}; }

inline GridSpec scenario_grid(double halfspan = 4.5, double dt = 1.0 / 2048.0) {
    return GridSpec::regular(-halfspan, halfspan, dt);
}

inline SampledSignal scenario_signal(std::uint64_t seed) {
    return generate_multipulse(scenario_grid(), scenario_params(),
                               scenario_shapes(), seed);
}

/// Narrow variant (beta = 2) so that K stays small and the O(M K n) channel
/// integration loops finish quickly.
inline ModelParams mini_params() { return {2, 0.13, 2.0, 20.0, 0.1}; }

inline SampledSignal mini_signal(std::uint64_t seed) {
    GridSpec grid = GridSpec::regular(-1.25, 1.25, 1.0 / 2048.0);
    ModelParams p = mini_params();
    return generate_multipulse(grid, p, scenario_shapes(), seed);
}

}  // namespace xs::testing
