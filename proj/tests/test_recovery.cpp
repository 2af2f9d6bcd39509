#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "xsampler/recovery.hpp"
#include "xsampler/sampler.hpp"

using namespace xs;

namespace {

struct SparseTrial {
    Eigen::MatrixXd C;
    Eigen::MatrixXcd Z;
    std::vector<int> support;
    SampleMatrix X;
};

SparseTrial make_trial(int M, int K, int L, int S, std::uint64_t seed) {
    SparseTrial t;
    t.C = bernoulli_matrix(M, K, 777 + seed);
    t.Z = Eigen::MatrixXcd::Zero(K, L);
    std::mt19937_64 rng(1234 + seed);
    std::vector<int> idx(K);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    t.support.assign(idx.begin(), idx.begin() + S);
    std::sort(t.support.begin(), t.support.end());
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int r : t.support)
        for (int l = 0; l < L; ++l) t.Z(r, l) = {nd(rng), nd(rng)};
    t.X.X = t.C * t.Z;
    return t;
}

}  // namespace

TEST_CASE("sparsity budget") {
    CHECK(sparsity_budget(0.5, 3) == 12);
    CHECK(sparsity_budget(0.75, 3) == 9);
    CHECK(sparsity_budget(0.2, 3) == 30);
    CHECK_THROWS(sparsity_budget(0.0, 3));
    CHECK_THROWS(sparsity_budget(0.5, 0));
}

TEST_CASE("somp recovers exact row-sparse matrices") {
    int exact = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        SparseTrial t = make_trial(25, 125, 9, 12, s);
        RecoveryResult r = somp(t.X, t.C, 12);
        if (r.support.indices == t.support &&
            (r.Z_hat - t.Z).norm() / t.Z.norm() <= 1e-8)
            ++exact;
    }
    CHECK(exact >= 18);
}

TEST_CASE("somp trivial cases") {
    Eigen::MatrixXd C = bernoulli_matrix(6, 20, 3);
    SampleMatrix X;
    X.X = Eigen::MatrixXcd::Zero(6, 5);
    RecoveryResult r = somp(X, C, 4);
    CHECK(r.support.indices.empty());
    CHECK(r.Z_hat.norm() == 0.0);
    CHECK(r.residual == 0.0);

    CHECK_THROWS(somp(X, C, 7));  // S > M

    // identity dictionary: picks the S largest-norm rows
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(8, 8);
    SampleMatrix Y;
    Y.X = Eigen::MatrixXcd::Zero(8, 3);
    Y.X.row(1).setConstant(3.0);
    Y.X.row(4).setConstant(5.0);
    Y.X.row(6).setConstant(1.0);
    RecoveryResult ri = somp(Y, I, 2);
    CHECK(ri.support.indices == std::vector<int>{1, 4});
    CHECK((ri.Z_hat.row(1) - Y.X.row(1)).norm() <= 1e-12);
    CHECK((ri.Z_hat.row(4) - Y.X.row(4)).norm() <= 1e-12);
    CHECK(ri.Z_hat.row(6).norm() == 0.0);
}

TEST_CASE("somp output is always row sparse") {
    SparseTrial t = make_trial(15, 60, 5, 20, 2);  // more rows than budget
    RecoveryResult r = somp(t.X, t.C, 10);
    int nz = 0;
    for (int k = 0; k < 60; ++k)
        if (r.Z_hat.row(k).norm() > 0.0) ++nz;
    CHECK(nz <= 10);
    CHECK(static_cast<int>(r.support.indices.size()) <= 10);
    CHECK(std::is_sorted(r.support.indices.begin(), r.support.indices.end()));
}

TEST_CASE("ls_on_support") {
    SparseTrial t = make_trial(25, 125, 9, 12, 0);

    SupportSet truth;
    truth.indices = t.support;
    truth.s_max = 12;
    Eigen::MatrixXcd Z = ls_on_support(t.X, t.C, truth);
    CHECK((Z - t.Z).norm() / t.Z.norm() <= 1e-10);

    SupportSet empty;
    CHECK(ls_on_support(t.X, t.C, empty).norm() == 0.0);

    // orthonormal columns: pseudoinverse reduces to the transpose
    Eigen::MatrixXd Q = Eigen::MatrixXd::Identity(6, 6);
    SampleMatrix X;
    X.X = Eigen::MatrixXcd::Random(6, 4);
    SupportSet s2;
    s2.indices = {1, 3};
    Eigen::MatrixXcd Zq = ls_on_support(X, Q, s2);
    CHECK((Zq.row(1) - X.X.row(1)).norm() <= 1e-12);
    CHECK((Zq.row(3) - X.X.row(3)).norm() <= 1e-12);

    // duplicated columns make the active set rank deficient
    Eigen::MatrixXd D(4, 3);
    D.col(0) = Eigen::Vector4d(1, 2, 3, 4);
    D.col(1) = D.col(0);
    D.col(2) = Eigen::Vector4d(1, 0, 0, 0);
    SampleMatrix Xd;
    Xd.X = Eigen::MatrixXcd::Random(4, 2);
    SupportSet bad;
    bad.indices = {0, 1};
    bool threw = false;
    try {
        static_cast<void>(ls_on_support(Xd, D, bad));
    } catch (const std::runtime_error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("{0,1}") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("best S-term approximation") {
    CoefficientGrid Zg;
    Zg.extent = LatticeExtent{2, 1};
    Zg.Z = Eigen::MatrixXcd::Zero(5, 3);
    Zg.Z.row(0).setConstant(2.0);
    Zg.Z.row(2).setConstant(5.0);
    Zg.Z.row(3).setConstant(2.0);  // ties with row 0; lower index wins

    BestSTerm b2 = best_s_term(Zg, 2);
    CHECK(b2.support.indices == std::vector<int>{0, 2});
    CHECK(b2.defect == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK((b2.Z_S.row(2) - Zg.Z.row(2)).norm() == 0.0);
    CHECK(b2.Z_S.row(3).norm() == 0.0);

    BestSTerm b3 = best_s_term(Zg, 3);
    CHECK(b3.defect == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((b3.Z_S - Zg.Z).norm() == 0.0);

    BestSTerm b0 = best_s_term(Zg, 0);
    CHECK(b0.defect == doctest::Approx(l21_norm(Zg.Z)).epsilon(1e-12));

    CHECK_THROWS(best_s_term(Zg, 6));
}

TEST_CASE("recover_noisy stopping rule") {
    SparseTrial t = make_trial(25, 125, 9, 12, 5);

    RecoveryResult a = somp(t.X, t.C, 12);
    RecoveryResult b = recover_noisy(t.X, t.C, 12, 0.0);
    CHECK(a.support.indices == b.support.indices);
    CHECK((a.Z_hat - b.Z_hat).norm() == 0.0);

    RecoveryResult c = recover_noisy(t.X, t.C, 12, 2.0 * t.X.X.norm());
    CHECK(c.support.indices.empty());

    CHECK_THROWS(recover_noisy(t.X, t.C, 12, -1.0));
}

TEST_CASE("empirical RIP estimate") {
    // exact isometry
    Eigen::MatrixXd I = std::sqrt(10.0) * Eigen::MatrixXd::Identity(10, 10);
    CHECK(empirical_rip(I, 4, 20, 1) <= 1e-12);

    // monotone in S (nested subsets per trial)
    Eigen::MatrixXd C = bernoulli_matrix(25, 125, 9);
    double prev = 0.0;
    for (int S = 2; S <= 14; S += 3) {
        double d = empirical_rip(C, S, 30, 77);
        CHECK(d >= prev - 1e-12);
        prev = d;
    }

    // the benchmark regime: finite positive estimate, reported not enforced
    double d12 = empirical_rip(C, 12, 50, 5);
    CHECK(d12 > 0.0);
    CHECK(std::isfinite(d12));

    CHECK_THROWS(empirical_rip(C, 30, 5, 1));
}
