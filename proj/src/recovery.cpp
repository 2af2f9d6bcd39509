#include "xsampler/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace xs {

int sparsity_budget(double mu, int N) {
    if (!(mu > 0.0) || N < 1)
        throw std::invalid_argument("sparsity_budget: need mu > 0 and N >= 1");
    return static_cast<int>(std::ceil(2.0 / mu - 1e-12)) * N;
}

namespace {

Eigen::MatrixXcd solve_active(const Eigen::MatrixXd& C,
                              const std::vector<int>& active,
                              const Eigen::MatrixXcd& X) {
    Eigen::MatrixXd Cs(C.rows(), static_cast<Eigen::Index>(active.size()));
    for (std::size_t j = 0; j < active.size(); ++j) Cs.col(j) = C.col(active[j]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Cs);
    if (qr.rank() < static_cast<Eigen::Index>(active.size())) {
        std::ostringstream oss;
        oss << "least squares: rank-deficient active set {";
        for (std::size_t j = 0; j < active.size(); ++j)
            oss << (j ? "," : "") << active[j];
        oss << "}";
        throw std::runtime_error(oss.str());
    }
    Eigen::MatrixXcd A(X.rows(), X.cols());
    A.real() = qr.solve(X.real().eval());
    A.imag() = qr.solve(X.imag().eval());
    return A;
}

}  // namespace

RecoveryResult somp(const SampleMatrix& X, const Eigen::MatrixXd& C, int S,
                    double residual_tol) {
    const int M = static_cast<int>(C.rows());
    const int K = static_cast<int>(C.cols());
    if (X.X.rows() != M) throw std::invalid_argument("somp: X/C row mismatch");
    if (S > M) throw std::invalid_argument("somp: S must not exceed M");

    RecoveryResult res;
    res.Z_hat = Eigen::MatrixXcd::Zero(K, X.X.cols());

    Eigen::MatrixXcd R = X.X;
    std::vector<int> active;
    Eigen::MatrixXcd A;  // coefficients on the active set

    // order-recursive selection: each candidate column is first projected off
    // the span of the active set and normalized, so already-explained energy
    // cannot mask a weak atom (substantially more reliable than the raw
    // correlation rule near the M ~ 2S operating point)
    Eigen::MatrixXd Q(M, 0);  // orthonormal basis of the active columns

    while (static_cast<int>(active.size()) < S && R.norm() > residual_tol &&
           R.norm() > 1e-13) {
        int best = -1;
        double best_v = 0.0;
        for (int k = 0; k < K; ++k) {
            if (std::find(active.begin(), active.end(), k) != active.end()) continue;
            Eigen::VectorXd c = C.col(k);
            if (Q.cols() > 0) c -= Q * (Q.transpose() * c);
            const double cn = c.norm();
            if (cn < 1e-9 * std::sqrt(static_cast<double>(M))) continue;
            const double v = (c.transpose() * R).norm() / cn;
            if (v > best_v * (1.0 + 1e-15)) {
                best_v = v;
                best = k;
            }
        }
        if (best < 0 || best_v == 0.0) break;
        active.push_back(best);

        Eigen::VectorXd q = C.col(best);
        if (Q.cols() > 0) q -= Q * (Q.transpose() * q);
        q.normalize();
        Q.conservativeResize(M, Q.cols() + 1);
        Q.col(Q.cols() - 1) = q;

        A = solve_active(C, active, X.X);
        R = X.X;
        for (std::size_t j = 0; j < active.size(); ++j)
            R -= C.col(active[j]) * A.row(static_cast<Eigen::Index>(j));
        ++res.iterations;
    }

    if (static_cast<int>(active.size()) > S) {
        // keep the S rows with the largest coefficient norms (lower column
        // index wins ties), then re-solve on the pruned set
        std::vector<int> order(active.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
            const double ni = A.row(i).norm(), nj = A.row(j).norm();
            if (ni != nj) return ni > nj;
            return active[i] < active[j];
        });
        std::vector<int> kept;
        for (int j = 0; j < S; ++j) kept.push_back(active[order[j]]);
        std::sort(kept.begin(), kept.end());
        active = kept;
        A = solve_active(C, active, X.X);
        R = X.X;
        for (std::size_t j = 0; j < active.size(); ++j)
            R -= C.col(active[j]) * A.row(static_cast<Eigen::Index>(j));
    }

    std::vector<int> order(active.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return active[i] < active[j]; });
    for (int oi : order) res.support.indices.push_back(active[oi]);
    res.support.s_max = S;
    for (std::size_t j = 0; j < active.size(); ++j)
        res.Z_hat.row(active[j]) = A.row(static_cast<Eigen::Index>(j));
    res.residual = R.norm();
    return res;
}

Eigen::MatrixXcd ls_on_support(const SampleMatrix& X, const Eigen::MatrixXd& C,
                               const SupportSet& support) {
    const int K = static_cast<int>(C.cols());
    Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(K, X.X.cols());
    if (support.indices.empty()) return Z;
    if (static_cast<int>(support.indices.size()) > C.rows())
        throw std::invalid_argument("ls_on_support: support larger than M");
    Eigen::MatrixXcd A = solve_active(C, support.indices, X.X);
    for (std::size_t j = 0; j < support.indices.size(); ++j)
        Z.row(support.indices[j]) = A.row(static_cast<Eigen::Index>(j));
    return Z;
}

BestSTerm best_s_term(const CoefficientGrid& Zg, int S) {
    const int K = static_cast<int>(Zg.Z.rows());
    if (S > K) throw std::invalid_argument("best_s_term: S exceeds row count");
    std::vector<double> norms(K);
    for (int r = 0; r < K; ++r) norms[r] = Zg.Z.row(r).norm();
    std::vector<int> order(K);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return norms[i] > norms[j]; });

    BestSTerm out;
    out.support.s_max = S;
    out.Z_S = Eigen::MatrixXcd::Zero(K, Zg.Z.cols());
    for (int j = 0; j < S; ++j) {
        out.support.indices.push_back(order[j]);
        out.Z_S.row(order[j]) = Zg.Z.row(order[j]);
    }
    std::sort(out.support.indices.begin(), out.support.indices.end());
    for (int j = S; j < K; ++j) out.defect += norms[order[j]];
    return out;
}

RecoveryResult recover_noisy(const SampleMatrix& X, const Eigen::MatrixXd& C,
                             int S, double noise_norm) {
    if (noise_norm < 0.0)
        throw std::invalid_argument("recover_noisy: noise_norm must be >= 0");
    return somp(X, C, S, noise_norm);
}

double empirical_rip(const Eigen::MatrixXd& C, int S, int trials,
                     std::uint64_t seed) {
    const int M = static_cast<int>(C.rows());
    const int K = static_cast<int>(C.cols());
    if (S > M) throw std::invalid_argument("empirical_rip: S must not exceed M");
    const double scale = 1.0 / std::sqrt(static_cast<double>(M));
    double delta = 0.0;
    for (int t = 0; t < trials; ++t) {
        // one stream per trial so the S-subset of trial t is nested in the
        // (S+1)-subset of the same trial, making delta monotone in S
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
        std::vector<int> idx(K);
        std::iota(idx.begin(), idx.end(), 0);
        // partial Fisher-Yates draw of an S-subset
        for (int j = 0; j < S; ++j) {
            std::uniform_int_distribution<int> pick(j, K - 1);
            std::swap(idx[j], idx[pick(rng)]);
        }
        Eigen::MatrixXd Cs(M, S);
        for (int j = 0; j < S; ++j) Cs.col(j) = scale * C.col(idx[j]);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(Cs);
        const auto& sv = svd.singularValues();
        double smax = sv(0), smin = sv(sv.size() - 1);
        delta = std::max({delta, smax * smax - 1.0, 1.0 - smin * smin});
    }
    return delta;
}

}  // namespace xs
