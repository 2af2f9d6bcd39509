#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "test_helpers.hpp"
#include "xsampler/io.hpp"
#include "xsampler/sampler.hpp"

using namespace xs;
using namespace xs::testing;
namespace fs = std::filesystem;

namespace {

std::string tmp_path(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "xsampler_io_test";
    fs::create_directories(dir);
    return (dir / name).string();
}

}  // namespace

TEST_CASE("format_full round trips doubles") {
    for (double v : {0.1, 1.0 / 3.0, 1e-17, -2.5e300, 0.0})
        CHECK(std::stod(format_full(v)) == v);
}

TEST_CASE("signal CSV round trip is bit exact") {
    SampledSignal f = scenario_signal(21);
    std::string p = tmp_path("signal.csv");
    write_signal(f, p);
    SampledSignal g = read_signal(p);
    CHECK(g.grid.n_points == f.grid.n_points);
    CHECK(g.grid.dt == f.grid.dt);
    CHECK(g.grid.t_start == f.grid.t_start);
    CHECK(g.support_beta == f.support_beta);
    CHECK((g.values - f.values).norm() == 0.0);
}

TEST_CASE("coefficient CSV round trip") {
    SampledSignal f = mini_signal(3);
    GaborFrame frame = cosine_frame(0.13);
    LatticeExtent e = lattice_extent(2.0, 20.0, 0.13, frame.mu, frame.B, 3);
    CoefficientGrid Z = analyze(f, frame, e);

    std::string p = tmp_path("coeff.csv");
    write_coefficients(Z, p);
    CoefficientGrid Z2 = read_coefficients(p);
    CHECK(Z2.extent.K0 == e.K0);
    CHECK(Z2.extent.L0 == e.L0);
    CHECK((Z2.Z - Z.Z).norm() == 0.0);
}

TEST_CASE("sample matrix, frame metadata, recovery and window exports parse") {
    SampledSignal f = mini_signal(5);
    GaborFrame frame = cosine_frame(0.13);
    LatticeExtent e = lattice_extent(2.0, 20.0, 0.13, frame.mu, frame.B, 3);
    MeasurementEnsemble ens = make_ensemble(frame, e, 6, 4);
    CoefficientGrid Z = analyze(f, frame, e);
    SampleMatrix X = acquire_fast(Z, ens);

    std::string sp = tmp_path("samples.csv");
    write_samples(X, e.L0, sp);
    std::ifstream is(sp);
    std::string header;
    std::getline(is, header);
    CHECK(header == "m,l,re,im");
    int lines = 0;
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) ++lines;
    CHECK(lines == ens.M * e.L());

    std::string fp = tmp_path("frame.json");
    write_frame_metadata(frame, frame_constants(frame), fp);
    std::ifstream fin(fp);
    nlohmann::json j = nlohmann::json::parse(fin);
    CHECK(j["a"].get<double>() == frame.a);
    CHECK(j["mu"].get<double>() == frame.mu);

    RecoveryResult rec = somp(X, ens.C, 4);
    std::string rp = tmp_path("recovery.json");
    write_recovery(rec, rp);
    std::ifstream rin(rp);
    nlohmann::json rj = nlohmann::json::parse(rin);
    CHECK(rj["support"].size() == rec.support.indices.size());
    CHECK(rj.contains("residual"));
    CHECK(rj.contains("iterations"));

    std::string wp = tmp_path("windows.csv");
    GridSpec wgrid = GridSpec::regular(-0.1, 0.1, 1.0 / 2048.0);
    write_windows(frame, wgrid, wp);
    std::ifstream win(wp);
    std::getline(win, header);
    CHECK(header == "t,g,gamma");
}
