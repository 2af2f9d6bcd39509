#include "xsampler/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace xs {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<PulseSpec> default_shapes(double W) {
    PulseSpec p1{PulseShape::bspline2, W, 0.0, 1.0, {}};
    PulseSpec p2{PulseShape::bspline4, W, 0.0, 1.0, {}};
    PulseSpec p3{PulseShape::cosine, W, 0.0, 1.0, {}};
    return {p1, p2, p3};
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

}  // namespace

ScenarioConfig parse_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);

    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "N") cfg.model.N = std::stoi(val);
            else if (key == "W") cfg.model.W = std::stod(val);
            else if (key == "beta") cfg.model.beta = std::stod(val);
            else if (key == "Omega") cfg.model.Omega = std::stod(val);
            else if (key == "eps_Omega") cfg.model.eps_Omega = std::stod(val);
            else if (key == "grid_dt") cfg.grid_dt = std::stod(val);
            else if (key == "grid_halfspan") cfg.grid_halfspan = std::stod(val);
            else if (key == "seeds") cfg.n_seeds = std::stoi(val);
            else if (key == "base_seed") cfg.base_seed = std::stoull(val);
            else if (key == "frame") cfg.frame = val;
            else if (key == "M") cfg.M = std::stoi(val);
            else if (key == "L0_override") cfg.L0_override = std::stoi(val);
            else if (key == "output_dir") cfg.output_dir = val;
            else throw ConfigError("config line " + std::to_string(lineno) +
                                   ": unknown key '" + key + "'");
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": bad value for '" + key + "'");
        }
    }
    if (cfg.model.N < 1 || cfg.model.W <= 0.0 || cfg.model.beta <= 0.0 ||
        cfg.model.Omega <= 0.0 || cfg.n_seeds < 1 || cfg.grid_dt <= 0.0 ||
        cfg.grid_halfspan <= 0.0 || cfg.M == 0 || cfg.M < -1)
        throw ConfigError("config: parameters out of range");
    if (cfg.frame != "trapezoid" && cfg.frame != "cosine" && cfg.frame != "bspline5")
        throw ConfigError("config: frame must be trapezoid, cosine or bspline5");
    return cfg;
}

GridSpec make_grid(const ScenarioConfig& cfg) {
    return GridSpec::regular(-cfg.grid_halfspan, cfg.grid_halfspan, cfg.grid_dt);
}

GaborFrame frame_by_name(const std::string& name, double W) {
    if (name == "trapezoid") return trapezoid_pair(W);
    if (name == "cosine") return cosine_frame(W);
    if (name == "bspline5") return bspline_window(5, W);
    throw std::invalid_argument("unknown frame: " + name);
}

int default_M(const std::string& name) {
    if (name == "trapezoid") return 22;
    if (name == "cosine") return 25;
    if (name == "bspline5") return 65;
    throw std::invalid_argument("unknown frame: " + name);
}

int default_L0(const std::string& name) {
    if (name == "trapezoid") return 5;
    return 4;  // cosine, bspline5
}

Quartiles quartiles(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("quartiles: empty sample");
    std::sort(v.begin(), v.end());
    auto median_of = [](const std::vector<double>& s, int lo, int hi) {
        const int n = hi - lo;
        const int mid = lo + n / 2;
        return (n % 2) ? s[mid] : 0.5 * (s[mid - 1] + s[mid]);
    };
    Quartiles q;
    const int n = static_cast<int>(v.size());
    q.median = median_of(v, 0, n);
    q.q1 = median_of(v, 0, n / 2);
    q.q3 = median_of(v, (n + 1) / 2, n);
    return q;
}

PipelineResult run_pipeline(const ScenarioConfig& cfg, const PipelineOptions& opt,
                            const GaborFrame* prebuilt) {
    const GridSpec grid = make_grid(cfg);
    GaborFrame local;
    const GaborFrame* frame = prebuilt;
    if (!frame) {
        local = frame_by_name(opt.frame, cfg.model.W);
        frame = &local;
    }

    const int l0 = opt.L0_override >= 0 ? opt.L0_override : default_L0(opt.frame);
    const LatticeExtent extent = lattice_extent(cfg.model.beta, cfg.model.Omega,
                                                cfg.model.W, frame->mu, frame->B, l0);

    SampledSignal f = generate_multipulse(grid, cfg.model, default_shapes(cfg.model.W),
                                          opt.seed);
    CoefficientGrid Z = analyze(f, *frame, extent);

    MeasurementEnsemble ens =
        make_ensemble(*frame, extent, opt.M, opt.seed + 0x9E3779B9ull);

    // noise enters in the time domain; the analysis stage band-limits it, so
    // the sample-domain disturbance is much smaller than the signal-domain SNR
    // suggests
    SampleMatrix X;
    double noise_norm = 0.0;
    if (std::isfinite(opt.snr_db)) {
        SampledSignal f_noisy = add_noise(f, opt.snr_db, opt.seed + 0x6A09E667ull);
        if (opt.fast_path) {
            CoefficientGrid Zn = analyze(f_noisy, *frame, extent);
            X = acquire_fast(Zn, ens);
        } else {
            X = acquire(f_noisy, ens);
        }
        noise_norm = (X.X - acquire_fast(Z, ens).X).norm();
    } else {
        X = opt.fast_path ? acquire_fast(Z, ens) : acquire(f, ens);
    }
    // quantization runs the full S iterations (no early stop) so that the
    // selected support is comparable with the unquantized reference
    if (opt.bits > 0) X.X = quantize_matrix(X.X, opt.bits);

    const int S = std::min(opt.M, sparsity_budget(frame->mu, cfg.model.N));
    RecoveryResult rec = recover_noisy(X, ens.C, S, noise_norm);

    CoefficientGrid Zh{rec.Z_hat, extent};
    SampledSignal f_hat = synthesize(Zh, *frame, grid, cfg.model.beta);

    PipelineResult out;
    out.rel_error = relative_error(f, f_hat);
    out.coeff_error = (Z.Z - rec.Z_hat).norm() / Z.Z.norm();
    out.support = rec.support.indices;
    // location recovery: compare the significant rows (>= 1% of the Frobenius
    // norm) of the true and recovered grids; junk atoms carrying only
    // noise-level least-squares coefficients stay below the threshold
    std::vector<int> rec_sig;
    for (int r = 0; r < extent.K(); ++r) {
        if (Z.Z.row(r).norm() >= 0.01 * Z.Z.norm()) out.true_support.push_back(r);
        if (rec.Z_hat.row(r).norm() >= 0.01 * rec.Z_hat.norm()) rec_sig.push_back(r);
    }
    out.support_ok = rec_sig == out.true_support;
    out.K = extent.K();
    out.L = extent.L();
    out.S = S;
    return out;
}

void run_table2(const ScenarioConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_dir);

    struct Row {
        std::string name;
        int K = 0, L = 0, M = 0;
        Quartiles err;
    };
    std::vector<Row> rows;

    for (const std::string name : {"trapezoid", "cosine", "bspline5"}) {
        GaborFrame frame = frame_by_name(name, cfg.model.W);
        PipelineOptions opt;
        opt.frame = name;
        opt.M = default_M(name);
        std::vector<double> errs;
        Row row;
        row.name = name;
        row.M = opt.M;
        for (int s = 0; s < cfg.n_seeds; ++s) {
            opt.seed = cfg.base_seed + static_cast<std::uint64_t>(s);
            PipelineResult r = run_pipeline(cfg, opt, &frame);
            errs.push_back(r.rel_error);
            row.K = r.K;
            row.L = r.L;
        }
        row.err = quartiles(errs);
        rows.push_back(row);
    }

    // dense-reconstruction reference row: truncated Fourier series on the
    // support interval with ~600 coefficients
    {
        const GridSpec grid = make_grid(cfg);
        const int l0_fourier = 300;
        std::vector<double> errs;
        for (int s = 0; s < cfg.n_seeds; ++s) {
            SampledSignal f = generate_multipulse(
                grid, cfg.model, default_shapes(cfg.model.W),
                cfg.base_seed + static_cast<std::uint64_t>(s));
            errs.push_back(fourier_truncated(f, l0_fourier).measured_error);
        }
        Row row;
        row.name = "nyquist";
        row.K = 2 * l0_fourier + 1;
        row.L = 1;
        row.M = 2 * l0_fourier + 1;
        row.err = quartiles(errs);
        rows.push_back(row);
    }

    auto csv = open_out(cfg.output_dir + "/table2.csv");
    csv << "window,K,L,samples_without_sparsity,M,samples_with_sparsity,"
           "median_error,q1_error,q3_error\n";
    std::printf("%-12s %22s %19s %14s\n", "window", "samples w/o sparsity",
                "samples w/ sparsity", "recovery error");
    for (const Row& r : rows) {
        csv << r.name << ',' << r.K << ',' << r.L << ',' << r.K * r.L << ','
            << r.M << ',' << r.M * r.L << ',' << format_full(r.err.median) << ','
            << format_full(r.err.q1) << ',' << format_full(r.err.q3) << '\n';
        std::printf("%-12s %22d %19d %14.4f\n", r.name.c_str(), r.K * r.L,
                    r.M * r.L, r.err.median);
    }

    nlohmann::json rep;
    rep["seeds"] = cfg.n_seeds;
    rep["base_seed"] = cfg.base_seed;
    for (const Row& r : rows) {
        nlohmann::json jr;
        jr["K"] = r.K;
        jr["L"] = r.L;
        jr["M"] = r.M;
        jr["median_error"] = r.err.median;
        jr["iqr"] = {r.err.q1, r.err.q3};
        rep["rows"][r.name] = jr;
    }
    rep["notes"] = "bspline5 K follows ceil((beta+W)/(2*W*mu)) - 1 with mu = 1/5";
    open_out(cfg.output_dir + "/report.json") << rep.dump(2) << '\n';
}

void run_noise_sweep(const ScenarioConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_dir);

    const std::vector<int> Ms = {10, 15, 20, 25, 30, 35, 40, 45};
    const double inf = std::numeric_limits<double>::infinity();
    const std::vector<double> snrs = {5.0, 10.0, 15.0, 20.0, 25.0, inf};

    GaborFrame frame = frame_by_name(cfg.frame, cfg.model.W);

    auto csv = open_out(cfg.output_dir + "/noise.csv");
    csv << "M,snr_db,median_error,q1_error,q3_error\n";
    std::vector<SvgSeries> series(snrs.size());

    for (std::size_t si = 0; si < snrs.size(); ++si) {
        std::ostringstream label;
        if (std::isfinite(snrs[si])) label << "SNR " << snrs[si] << " dB";
        else label << "noiseless";
        series[si].label = label.str();
    }

    for (int M : Ms) {
        for (std::size_t si = 0; si < snrs.size(); ++si) {
            PipelineOptions opt;
            opt.frame = cfg.frame;
            opt.M = M;
            opt.snr_db = snrs[si];
            opt.fast_path = true;
            std::vector<double> errs;
            for (int s = 0; s < cfg.n_seeds; ++s) {
                opt.seed = cfg.base_seed + static_cast<std::uint64_t>(s);
                errs.push_back(run_pipeline(cfg, opt, &frame).rel_error);
            }
            Quartiles q = quartiles(errs);
            csv << M << ',';
            if (std::isfinite(snrs[si])) csv << snrs[si];
            else csv << "inf";
            csv << ',' << format_full(q.median) << ',' << format_full(q.q1) << ','
                << format_full(q.q3) << '\n';
            series[si].points.emplace_back(M, q.median);
        }
    }

    write_svg_chart(cfg.output_dir + "/noise.svg",
                    "Median reconstruction error vs channel count", "M",
                    "relative error", series, true);
}

void run_quantization(const ScenarioConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_dir);

    GaborFrame frame = frame_by_name(cfg.frame, cfg.model.W);
    // default to the channel count at which the noise sweep reaches the
    // noiseless floor, so quantization effects are isolated from recovery
    // fragility
    const int M = cfg.M > 0 ? cfg.M : 35;

    auto csv = open_out(cfg.output_dir + "/quant.csv");
    csv << "bits,median_coeff_error,q1,q3,exact_support_rate,location_hit_rate\n";

    SvgSeries err_series{"coefficient error", {}};
    SvgSeries rate_series{"exact support rate", {}};
    for (int bits = 1; bits <= 12; ++bits) {
        std::vector<double> errs;
        int matches = 0;
        double hit_sum = 0.0;
        for (int s = 0; s < cfg.n_seeds; ++s) {
            PipelineOptions opt;
            opt.frame = cfg.frame;
            opt.M = M;
            opt.bits = bits;
            opt.fast_path = true;
            opt.seed = cfg.base_seed + static_cast<std::uint64_t>(s);
            PipelineResult r = run_pipeline(cfg, opt, &frame);
            errs.push_back(r.coeff_error);
            if (r.support_ok) ++matches;
            int hits = 0;
            for (int k : r.true_support)
                if (std::find(r.support.begin(), r.support.end(), k) !=
                    r.support.end())
                    ++hits;
            hit_sum += r.true_support.empty()
                           ? 1.0
                           : static_cast<double>(hits) / r.true_support.size();
        }
        Quartiles q = quartiles(errs);
        const double rate = static_cast<double>(matches) / cfg.n_seeds;
        const double hit_rate = hit_sum / cfg.n_seeds;
        csv << bits << ',' << format_full(q.median) << ',' << format_full(q.q1)
            << ',' << format_full(q.q3) << ',' << format_full(rate) << ','
            << format_full(hit_rate) << '\n';
        err_series.points.emplace_back(bits, q.median);
        rate_series.points.emplace_back(bits, std::max(rate, 1e-3));
    }

    write_svg_chart(cfg.output_dir + "/quant.svg",
                    "Coefficient error vs quantizer depth", "bits",
                    "relative coefficient error / match rate",
                    {err_series, rate_series}, true);
}

void run_demo(const ScenarioConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output_dir);

    const GridSpec grid = make_grid(cfg);
    GaborFrame frame = frame_by_name(cfg.frame, cfg.model.W);
    const int l0 = cfg.L0_override >= 0 ? cfg.L0_override : default_L0(cfg.frame);
    const LatticeExtent extent = lattice_extent(cfg.model.beta, cfg.model.Omega,
                                                cfg.model.W, frame.mu, frame.B, l0);

    SampledSignal f = generate_multipulse(grid, cfg.model, default_shapes(cfg.model.W),
                                          cfg.base_seed);
    CoefficientGrid Z = analyze(f, frame, extent);
    const int M = cfg.M > 0 ? cfg.M : default_M(cfg.frame);
    MeasurementEnsemble ens =
        make_ensemble(frame, extent, M, cfg.base_seed + 0x9E3779B9ull);
    SampleMatrix X = acquire(f, ens);
    const int S = std::min(M, sparsity_budget(frame.mu, cfg.model.N));
    RecoveryResult rec = somp(X, ens.C, S);
    CoefficientGrid Zh{rec.Z_hat, extent};
    SampledSignal f_hat = synthesize(Zh, frame, grid, cfg.model.beta);

    write_signal(f, cfg.output_dir + "/signal.csv");
    write_signal(f_hat, cfg.output_dir + "/reconstruction.csv");
    write_coefficients(Z, cfg.output_dir + "/coefficients.csv");
    write_samples(X, extent.L0, cfg.output_dir + "/samples.csv");
    write_recovery(rec, cfg.output_dir + "/recovery.json");
    write_frame_metadata(frame, frame_constants(frame), cfg.output_dir + "/frame.json");
    const GridSpec wgrid = GridSpec::regular(-0.5 * cfg.model.W, 0.5 * cfg.model.W,
                                             cfg.model.W / 512.0);
    write_windows(frame, wgrid, cfg.output_dir + "/windows.csv");

    SvgSeries orig{"signal", {}}, reco{"reconstruction", {}};
    for (int i = 0; i < grid.n_points; i += 4) {
        orig.points.emplace_back(grid.t(i), f.values(i));
        reco.points.emplace_back(grid.t(i), f_hat.values(i));
    }
    write_svg_chart(cfg.output_dir + "/demo.svg", "Signal and reconstruction", "t",
                    "f(t)", {orig, reco}, false);

    std::printf("demo: relative error %.6f, support size %zu, residual %.3e\n",
                relative_error(f, f_hat), rec.support.indices.size(), rec.residual);
}

void write_svg_chart(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<SvgSeries>& series, bool log_y) {
    const double width = 720.0, height = 480.0;
    const double ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    auto ty = [log_y](double y) {
        return log_y ? std::log10(std::max(y, 1e-12)) : y;
    };

    double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, ty(y));
            y_max = std::max(y_max, ty(y));
        }
    if (x_max <= x_min) x_max = x_min + 1.0;
    if (y_max <= y_min) y_max = y_min + 1.0;

    auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    auto py = [&](double y) { return mt + ph - (ty(y) - y_min) / (y_max - y_min) * ph; };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b"};

    auto os = open_out(path);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << width << "\" height=\"" << height << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
          "font-size=\"16\">" << title << "</text>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
       << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
       << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
       << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n"
       << "<text x=\"16\" y=\"" << mt + ph / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
       << mt + ph / 2 << ")\">" << y_label << "</text>\n";

    // min/max tick labels
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", x_min);
    os << "<text x=\"" << ml << "\" y=\"" << mt + ph + 18
       << "\" text-anchor=\"middle\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof(buf), "%g", x_max);
    os << "<text x=\"" << ml + pw << "\" y=\"" << mt + ph + 18
       << "\" text-anchor=\"middle\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof(buf), log_y ? "1e%g" : "%g", y_min);
    os << "<text x=\"" << ml - 6 << "\" y=\"" << mt + ph + 4
       << "\" text-anchor=\"end\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof(buf), log_y ? "1e%g" : "%g", y_max);
    os << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
       << "\" text-anchor=\"end\" font-size=\"11\">" << buf << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = colors[si % 6];
        os << "<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[si].points)
            os << px(x) << ',' << py(y) << ' ';
        os << "\"/>\n";
        os << "<text x=\"" << ml + pw - 8 << "\" y=\"" << mt + 16 + 16 * si
           << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">"
           << series[si].label << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace xs
