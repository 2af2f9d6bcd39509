#pragma once

#include <cstdint>

#include "xsampler/gabor_transform.hpp"

namespace xs {

/// Mixing matrix C (M x K, entries +-1 unless identity) together with the
/// frame and lattice extent that define the modulation waveforms p_r(t).
struct MeasurementEnsemble {
    Eigen::MatrixXd C;
    int M = 0;
    std::uint64_t seed = 0;
    GaborFrame frame;
    LatticeExtent extent;
};

/// M x L matrix of channel outputs X = C Z (+ N).
struct SampleMatrix {
    Eigen::MatrixXcd X;
};

/// i.i.d. equiprobable +-1 entries, deterministic per seed.
Eigen::MatrixXd bernoulli_matrix(int M, int K, std::uint64_t seed,
                                 bool allow_oversampled = false);

MeasurementEnsemble make_ensemble(const GaborFrame& frame, const LatticeExtent& extent,
                                  int M, std::uint64_t seed,
                                  bool identity = false,
                                  bool allow_oversampled = false);

/// Grid samples of p_r(t) = exp(-2 pi i b l t) sum_k c_mk conj(g(t - a k)).
Eigen::VectorXcd waveform(const MeasurementEnsemble& ens, int m, int l,
                          const GridSpec& grid);

/// Modulate-and-integrate acquisition: X[m,l] = integral over [-beta/2, beta/2]
/// of f(t) p_{(m,l)}(t) dt.
SampleMatrix acquire(const SampledSignal& f, const MeasurementEnsemble& ens);

/// X = C Z; the algebraic shortcut and the oracle for acquire.
SampleMatrix acquire_fast(const CoefficientGrid& Zg, const MeasurementEnsemble& ens);

/// Equivalent L-channel modulate-filter-sample front end: filter
/// s(t) = sum_m s_m(t + W K m) with s_m(t) = sum_k c_mk conj(g(t - a k)),
/// sampled at t = W K m.
struct FilterRepresentation {
    double tau = 0.0;    // sampling step W*K
    double theta = 0.0;  // modulation step b
    /// Exact evaluation of the composite filter s at time t.
    double s(const MeasurementEnsemble& ens, double t) const;
    /// Exact evaluation of a single block s_m.
    double s_block(const MeasurementEnsemble& ens, int m, double t) const;
};

FilterRepresentation filter_representation(const MeasurementEnsemble& ens);

/// Samples produced by the filter path; must match acquire.
SampleMatrix filter_samples(const SampledSignal& f, const MeasurementEnsemble& ens);

}  // namespace xs
