#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "xsampler/signal_model.hpp"

using namespace xs;
using namespace xs::testing;

TEST_CASE("cosine pulse matches its closed form") {
    PulseSpec p{PulseShape::cosine, 0.13, 0.0, 1.0, {}};
    for (double t = -0.064; t <= 0.064; t += 0.004)
        CHECK(pulse_value(p, t) == doctest::Approx(std::cos(M_PI * t / 0.13)).epsilon(1e-12));
    CHECK(pulse_value(p, 0.066) == 0.0);
    CHECK(pulse_value(p, -0.066) == 0.0);
}

TEST_CASE("generated multipulse signal: pointwise values and support") {
    GridSpec grid = scenario_grid();
    std::vector<PulseSpec> placed;
    SampledSignal f = generate_multipulse(grid, scenario_params(),
                                          scenario_shapes(), 7, false, placed);
    REQUIRE(placed.size() == 3);

    // each grid sample equals the sum of the placed closed-form pulses
    for (int i = 0; i < grid.n_points; i += 37) {
        double t = grid.t(i);
        double v = 0.0;
        for (const PulseSpec& p : placed) v += pulse_value(p, t - p.center);
        CHECK(f.values(i) == doctest::Approx(v).epsilon(1e-12));
    }

    // zero outside [-beta/2, beta/2]
    for (int i = 0; i < grid.n_points; ++i)
        if (std::abs(grid.t(i)) > 4.0 + 1e-9) CHECK(f.values(i) == 0.0);

    // pulses disjoint (no-overlap default) and support measure bounded
    int nz = 0;
    for (int i = 0; i < grid.n_points; ++i)
        if (f.values(i) != 0.0) ++nz;
    CHECK(nz * grid.dt <= 3 * 0.13 + 6 * grid.dt);

    // deterministic per seed
    SampledSignal f2 = generate_multipulse(grid, scenario_params(),
                                           scenario_shapes(), 7);
    CHECK((f.values - f2.values).norm() == 0.0);
    SampledSignal f3 = generate_multipulse(grid, scenario_params(),
                                           scenario_shapes(), 8);
    CHECK((f.values - f3.values).norm() > 0.0);
}

TEST_CASE("N = 0 gives the zero signal") {
    GridSpec grid = scenario_grid();
    ModelParams p = scenario_params();
    p.N = 0;
    SampledSignal f = generate_multipulse(grid, p, scenario_shapes(), 1);
    CHECK(f.values.norm() == 0.0);
}

TEST_CASE("infeasible placement raises") {
    GridSpec grid = GridSpec::regular(-0.3, 0.3, 1.0 / 2048.0);
    ModelParams p{8, 0.13, 0.5, 20.0, 0.1};  // 8 * 0.13 > 0.5
    CHECK_THROWS(generate_multipulse(grid, p, scenario_shapes(), 1));
}

TEST_CASE("tail_energy_fraction behaves like the spectral tail") {
    GridSpec grid = scenario_grid();

    // smooth windowed 5 Hz tone: essentially inside a 20 Hz band
    SampledSignal tone;
    tone.grid = grid;
    tone.support_beta = 8.0;
    tone.values.resize(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        double t = grid.t(i);
        double env = std::abs(t) <= 4.0 ? std::pow(std::cos(M_PI * t / 8.0), 2) : 0.0;
        tone.values(i) = env * std::cos(2.0 * M_PI * 5.0 * t);
    }
    CHECK(tail_energy_fraction(tone, 20.0) <= 1e-3);

    // reference scenario: frozen against a brute-force quadrature of
    // |f_hat|^2 outside +-10 Hz (0.1590 for seed 7)
    SampledSignal f = scenario_signal(7);
    CHECK(tail_energy_fraction(f, 20.0) == doctest::Approx(0.159).epsilon(0.02));

    // monotone non-increasing in Omega; vanishing at the grid Nyquist
    double prev = 1.0;
    for (double Om : {5.0, 10.0, 20.0, 40.0, 80.0}) {
        double v = tail_energy_fraction(f, Om);
        CHECK(v <= prev + 1e-12);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
    CHECK(tail_energy_fraction(f, 1.0 / grid.dt) <= 1e-6);

    SampledSignal zero = tone;
    zero.values.setZero();
    CHECK_THROWS(tail_energy_fraction(zero, 20.0));
}

TEST_CASE("add_noise hits the requested SNR exactly") {
    SampledSignal f = scenario_signal(3);

    SampledSignal same = add_noise(f, std::numeric_limits<double>::infinity(), 5);
    CHECK((same.values - f.values).norm() == 0.0);

    for (double snr : {0.0, 15.0, 40.0}) {
        SampledSignal g = add_noise(f, snr, 5);
        SampledSignal n = g;
        n.values = g.values - f.values;
        double measured = 20.0 * std::log10(l2_norm(f) / l2_norm(n));
        CHECK(std::abs(measured - snr) <= 0.5);
        // relative_error equals 10^(-snr/20)
        CHECK(relative_error(f, g) ==
              doctest::Approx(std::pow(10.0, -snr / 20.0)).epsilon(0.02));
        // noise confined to the support interval
        for (int i = 0; i < f.grid.n_points; ++i)
            if (std::abs(f.grid.t(i)) > 4.0 + 1e-9) CHECK(n.values(i) == 0.0);
    }

    SampledSignal a = add_noise(f, 15.0, 5);
    SampledSignal b = add_noise(f, 15.0, 5);
    CHECK((a.values - b.values).norm() == 0.0);
}

TEST_CASE("quantize_matrix level structure") {
    Eigen::MatrixXcd X(3, 4);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) X(i, j) = {u(rng), u(rng)};

    // huge depth: identity within 1e-12
    Eigen::MatrixXcd X52 = quantize_matrix(X, 52);
    CHECK((X52 - X).norm() / X.norm() <= 1e-12);

    // one bit: two-level real parts, idempotent
    Eigen::MatrixXcd X1 = quantize_matrix(X, 1);
    double lvl = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) {
            double r = std::abs(X1(i, j).real());
            if (lvl == 0.0) lvl = r;
            CHECK(r == doctest::Approx(lvl).epsilon(1e-12));
        }
    CHECK((quantize_matrix(X1, 1) - X1).norm() == 0.0);

    // per-entry error bounded by half a step
    for (int bits : {2, 4, 8}) {
        Eigen::MatrixXcd Q = quantize_matrix(X, bits);
        double mre = X.real().cwiseAbs().maxCoeff();
        double mim = X.imag().cwiseAbs().maxCoeff();
        double step_re = 2.0 * mre / ((1 << bits) - 1);
        double step_im = 2.0 * mim / ((1 << bits) - 1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) {
                CHECK(std::abs(Q(i, j).real() - X(i, j).real()) <= 0.5 * step_re + 1e-15);
                CHECK(std::abs(Q(i, j).imag() - X(i, j).imag()) <= 0.5 * step_im + 1e-15);
            }
    }

    CHECK_THROWS(quantize_matrix(X, 0));
}

TEST_CASE("relative_error identities") {
    SampledSignal f = scenario_signal(2);
    SampledSignal g = f;
    CHECK(relative_error(f, g) == 0.0);
    g.values.setZero();
    CHECK(relative_error(f, g) == doctest::Approx(1.0).epsilon(1e-12));
    g.values = 1.01 * f.values;
    CHECK(relative_error(f, g) == doctest::Approx(0.01).epsilon(1e-12));

    SampledSignal h = f;
    h.grid = GridSpec::regular(-4.5, 4.5, 1.0 / 1024.0);
    h.values.resize(h.grid.n_points);
    h.values.setZero();
    CHECK_THROWS(relative_error(f, h));
}
