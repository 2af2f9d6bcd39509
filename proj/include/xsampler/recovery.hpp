#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xsampler/sampler.hpp"

namespace xs {

/// Sorted set of selected time-shift indices k (absolute row index = k + K0 is
/// up to the caller; we store k-free column indices 0..K-1 of C).
struct SupportSet {
    std::vector<int> indices;  // sorted ascending, column indices into C
    int s_max = 0;             // budget ceil(2/mu)*N when known
};

struct RecoveryResult {
    SupportSet support;
    Eigen::MatrixXcd Z_hat;  // K x L, rows off support exactly zero
    double residual = 0.0;   // ||C Z_hat - X||_F
    int iterations = 0;
    std::optional<double> rip_estimate;
};

/// Simultaneous OMP for the MMV problem X = C Z with row-sparse Z: pick the
/// column with the largest aggregate residual correlation (lowest index on
/// ties), re-solve least squares on the active set, stop at S atoms or when
/// the residual drops to residual_tol.
RecoveryResult somp(const SampleMatrix& X, const Eigen::MatrixXd& C, int S,
                    double residual_tol = 0.0);

/// Per-column least squares on a fixed support: Z[support] = pinv(C_S) X.
Eigen::MatrixXcd ls_on_support(const SampleMatrix& X, const Eigen::MatrixXd& C,
                               const SupportSet& support);

/// Keeps the S rows of largest l2 norm (lower index wins ties); returns the
/// support, the thresholded matrix, and the defect ||Z - Z^S||_{2,1}.
struct BestSTerm {
    SupportSet support;
    Eigen::MatrixXcd Z_S;
    double defect = 0.0;
};
BestSTerm best_s_term(const CoefficientGrid& Zg, int S);

/// SOMP with a noise-aware stopping rule (residual <= noise_norm).
RecoveryResult recover_noisy(const SampleMatrix& X, const Eigen::MatrixXd& C,
                             int S, double noise_norm);

/// Monte Carlo lower bound on the RIP constant of (1/sqrt(M)) C at order S:
/// max over random S-subsets of max(1 - sigma_min^2, sigma_max^2 - 1).
double empirical_rip(const Eigen::MatrixXd& C, int S, int trials,
                     std::uint64_t seed);

/// Sparsity budget S_max = ceil(2/mu) * N.
int sparsity_budget(double mu, int N);

}  // namespace xs
