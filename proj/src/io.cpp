#include "xsampler/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace xs {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

}  // namespace

void write_signal(const SampledSignal& f, const std::string& csv_path) {
    auto os = open_out(csv_path);
    os << "t,value\n";
    for (int i = 0; i < f.grid.n_points; ++i)
        os << format_full(f.grid.t(i)) << ',' << format_full(f.values(i)) << '\n';

    nlohmann::json meta;
    meta["beta"] = f.support_beta;
    meta["dt"] = f.grid.dt;
    meta["n_points"] = f.grid.n_points;
    meta["t_start"] = f.grid.t_start;
    auto js = open_out(csv_path + ".json");
    js << meta.dump(2) << '\n';
}

SampledSignal read_signal(const std::string& csv_path) {
    nlohmann::json meta;
    open_in(csv_path + ".json") >> meta;

    SampledSignal f;
    f.support_beta = meta.at("beta").get<double>();
    f.grid.dt = meta.at("dt").get<double>();
    f.grid.n_points = meta.at("n_points").get<int>();
    f.grid.t_start = meta.at("t_start").get<double>();
    f.grid.t_end = f.grid.t_start + (f.grid.n_points - 1) * f.grid.dt;
    f.values.resize(f.grid.n_points);

    auto is = open_in(csv_path);
    std::string line;
    std::getline(is, line);  // header
    for (int i = 0; i < f.grid.n_points; ++i) {
        if (!std::getline(is, line))
            throw std::runtime_error("truncated signal CSV: " + csv_path);
        const auto comma = line.find(',');
        f.values(i) = std::stod(line.substr(comma + 1));
    }
    return f;
}

void write_coefficients(const CoefficientGrid& Zg, const std::string& csv_path) {
    auto os = open_out(csv_path);
    os << "k,l,re,im\n";
    const LatticeExtent& e = Zg.extent;
    for (int k = -e.K0; k <= e.K0; ++k)
        for (int l = -e.L0; l <= e.L0; ++l) {
            const auto z = Zg.Z(k + e.K0, l + e.L0);
            os << k << ',' << l << ',' << format_full(z.real()) << ','
               << format_full(z.imag()) << '\n';
        }
}

CoefficientGrid read_coefficients(const std::string& csv_path) {
    auto is = open_in(csv_path);
    std::string line;
    std::getline(is, line);  // header
    struct Row { int k, l; double re, im; };
    std::vector<Row> rows;
    int kmax = 0, lmax = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Row r;
        std::istringstream ss(line);
        char c;
        ss >> r.k >> c >> r.l >> c >> r.re >> c >> r.im;
        kmax = std::max(kmax, std::abs(r.k));
        lmax = std::max(lmax, std::abs(r.l));
        rows.push_back(r);
    }
    CoefficientGrid Zg;
    Zg.extent.K0 = kmax;
    Zg.extent.L0 = lmax;
    Zg.Z = Eigen::MatrixXcd::Zero(Zg.extent.K(), Zg.extent.L());
    for (const auto& r : rows)
        Zg.Z(r.k + kmax, r.l + lmax) = std::complex<double>(r.re, r.im);
    return Zg;
}

void write_samples(const SampleMatrix& X, int L0, const std::string& csv_path) {
    auto os = open_out(csv_path);
    os << "m,l,re,im\n";
    for (Eigen::Index m = 0; m < X.X.rows(); ++m)
        for (Eigen::Index c = 0; c < X.X.cols(); ++c)
            os << m << ',' << (static_cast<int>(c) - L0) << ','
               << format_full(X.X(m, c).real()) << ','
               << format_full(X.X(m, c).imag()) << '\n';
}

void write_frame_metadata(const GaborFrame& frame, const FrameConstants& constants,
                          const std::string& json_path) {
    nlohmann::json j;
    j["a"] = frame.a;
    j["b"] = frame.b;
    j["mu"] = frame.mu;
    j["support_alpha"] = frame.g.support_alpha;
    j["A1"] = frame.A1;
    j["A2"] = frame.A2;
    j["essential_band"] = frame.B;
    j["eps_B"] = frame.eps_B;
    j["C_ab"] = constants.C_ab;
    j["s0_g"] = constants.s0_g;
    j["s0_gamma"] = constants.s0_gamma;
    j["C0_tilde"] = constants.C0_tilde;
    open_out(json_path) << j.dump(2) << '\n';
}

void write_recovery(const RecoveryResult& res, const std::string& json_path) {
    nlohmann::json j;
    j["support"] = res.support.indices;
    j["residual"] = res.residual;
    j["iterations"] = res.iterations;
    if (res.rip_estimate)
        j["rip_estimate"] = *res.rip_estimate;
    else
        j["rip_estimate"] = nullptr;
    open_out(json_path) << j.dump(2) << '\n';
}

void write_windows(const GaborFrame& frame, const GridSpec& grid,
                   const std::string& csv_path) {
    auto os = open_out(csv_path);
    os << "t,g,gamma\n";
    for (int i = 0; i < grid.n_points; ++i) {
        const double t = grid.t(i);
        os << format_full(t) << ',' << format_full(frame.g(t)) << ','
           << format_full(frame.gamma(t)) << '\n';
    }
}

}  // namespace xs
