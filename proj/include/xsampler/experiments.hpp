#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsampler/baselines.hpp"
#include "xsampler/io.hpp"
#include "xsampler/recovery.hpp"

namespace xs {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters shared by all experiment drivers; defaults reproduce the
/// reference scenario (3 pulses of width 0.13 s on [-4, 4], 20 Hz band).
struct ScenarioConfig {
    ModelParams model{3, 0.13, 8.0, 20.0, 0.1};
    double grid_dt = 1.0 / 2048.0;
    double grid_halfspan = 4.5;
    int n_seeds = 25;
    std::uint64_t base_seed = 1;
    std::string frame = "cosine";  // trapezoid | cosine | bspline5
    int M = -1;  // -1: per-experiment default
    int L0_override = -1;  // -1: per-frame default
    std::string output_dir = ".";
};

/// Parses "key = value" lines ('#' comments, blank lines ignored).
/// Unknown keys or malformed values raise ConfigError.
ScenarioConfig parse_config(const std::string& path);

GridSpec make_grid(const ScenarioConfig& cfg);
GaborFrame frame_by_name(const std::string& name, double W);
int default_M(const std::string& name);
int default_L0(const std::string& name);

/// One full acquisition/recovery run.
struct PipelineOptions {
    std::string frame = "cosine";
    int M = 25;
    int L0_override = -1;
    double snr_db = std::numeric_limits<double>::infinity();
    int bits = 0;         // 0: no quantization
    bool fast_path = false;  // X = C Z instead of waveform integration
    std::uint64_t seed = 1;
};

struct PipelineResult {
    double rel_error = 0.0;    // ||f - f_hat|| / ||f||
    double coeff_error = 0.0;  // ||Z - Z_hat||_F / ||Z||_F
    std::vector<int> support;  // recovered column indices
    std::vector<int> true_support;  // rows of Z above the zero-row threshold
    bool support_ok = false;        // true_support subset of recovered support
    int K = 0, L = 0, S = 0;
};

/// Runs generate -> analyze -> sample -> recover -> synthesize for one seed.
/// A pre-built frame may be supplied to avoid rebuilding it per seed.
PipelineResult run_pipeline(const ScenarioConfig& cfg, const PipelineOptions& opt,
                            const GaborFrame* prebuilt = nullptr);

/// Frame-comparison table (CSV + console + report.json in cfg.output_dir).
void run_table2(const ScenarioConfig& cfg);
/// Median recovery error over an M x SNR grid (CSV + SVG).
void run_noise_sweep(const ScenarioConfig& cfg);
/// Coefficient error and support stability vs quantizer depth (CSV + SVG).
void run_quantization(const ScenarioConfig& cfg);
/// Single end-to-end run dumping every intermediate artifact.
void run_demo(const ScenarioConfig& cfg);

/// Median and quartiles of a sample (by sorting; averages the middle pair).
struct Quartiles {
    double q1 = 0.0, median = 0.0, q3 = 0.0;
};
Quartiles quartiles(std::vector<double> v);

/// Minimal SVG 1.1 line chart; one polyline per series, optional log10 y.
struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};
void write_svg_chart(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<SvgSeries>& series, bool log_y);

}  // namespace xs
