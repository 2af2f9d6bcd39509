#pragma once

#include <string>

#include "xsampler/gabor_frame.hpp"
#include "xsampler/recovery.hpp"

namespace xs {

/// Format a double with full round-trip precision (%.17g).
std::string format_full(double v);

/// Signal: CSV "t,value" plus a JSON sidecar (<path>.json) holding
/// {beta, dt, n_points, t_start}. Round trip is bit exact.
void write_signal(const SampledSignal& f, const std::string& csv_path);
SampledSignal read_signal(const std::string& csv_path);

/// Coefficient grid: CSV "k,l,re,im".
void write_coefficients(const CoefficientGrid& Zg, const std::string& csv_path);
CoefficientGrid read_coefficients(const std::string& csv_path);

/// Sample matrix: CSV "m,l,re,im" (l runs -L0..L0).
void write_samples(const SampleMatrix& X, int L0, const std::string& csv_path);

/// Frame metadata JSON: a, b, mu, bounds, essential band, constants.
void write_frame_metadata(const GaborFrame& frame, const FrameConstants& constants,
                          const std::string& json_path);

/// Recovery result JSON: {support:[...], residual, iterations, rip_estimate}.
void write_recovery(const RecoveryResult& res, const std::string& json_path);

/// Window table CSV "t,g,gamma" sampled on a grid.
void write_windows(const GaborFrame& frame, const GridSpec& grid,
                   const std::string& csv_path);

}  // namespace xs
