#pragma once

#include <cstdint>
#include <vector>

#include "coprime/weights.hpp"

namespace coprime {

/// One cosine component of the synthetic test signal. The phase is redrawn
/// i.i.d. uniform on [0, 2pi) per snapshot (keyed by phase_seed), which makes
/// the process wide-sense stationary with autocorrelation
/// sum_i a_i^2/2 cos(2 pi f_i l) + sigma^2 [l = 0].
/// frequency = 0 is a DC term: no phase draw, contributing a^2 at every lag.
struct SignalComponent {
    double amplitude = 1.0;
    double frequency = 0.0; // cycles per Nyquist period d
    std::uint64_t phase_seed = 0;
};

struct SignalSpec {
    std::vector<SignalComponent> components;
    double noise_sigma = 0.0;
};

/// One acquired snapshot: rN + rM sample values on a (possibly fresh) grid.
struct Snapshot {
    PerturbedGrid grid;
    std::vector<double> x1; // x(t1[n])
    std::vector<double> x2; // x(t2[m])
};

struct SnapshotBatch {
    CoprimeConfig config;
    std::vector<Snapshot> snapshots;
};

/// Deterministic given seed. Jitter is redrawn per snapshot unless
/// fixed_jitter is set, in which case every snapshot reuses the realization
/// drawn for snapshot 0.
SnapshotBatch generate_snapshots(const SignalSpec& spec, const CoprimeConfig& config,
                                 std::int64_t snapshot_count, std::uint64_t seed,
                                 bool fixed_jitter = false);

/// Per-lag autocorrelation estimate over lags 0..rMN-1. pair_counts matches
/// the corresponding weight table times the snapshot count; lags with no
/// contributing pair (coarray holes near rMN) are listed in empty_lags and
/// carry value 0 with pair_count 0.
struct AutocorrEstimate {
    std::vector<std::int64_t> lags;
    std::vector<double> values;
    std::vector<std::int64_t> pair_counts;
    std::vector<std::int64_t> empty_lags;
};

/// Blind: pairs by ideal integer index with the N-side coincidence duplicate
/// discarded, products accumulated at the ideal lag. NonBlind: pairs all
/// rM + rN samples using the true perturbed instants, products accumulated at
/// the mapped lag [l-1/2, l+1/2) -> l. Per-lag estimate = sum / pair count.
AutocorrEstimate estimate_autocorrelation(const SnapshotBatch& batch, EstimationScheme scheme);

/// sum_i a_i^2/2 cos(2 pi f_i lag) + sigma^2 [lag == 0].
double analytic_autocorrelation(const SignalSpec& spec, std::int64_t lag);

/// Monte-Carlo comparison of the two schemes against the analytic truth.
struct SchemeComparison {
    std::vector<std::int64_t> lags;
    std::vector<double> truth;
    std::vector<double> mse_blind;    // per lag, averaged over trials
    std::vector<double> mse_nonblind;
    std::vector<std::int64_t> pairs_blind;    // per snapshot
    std::vector<std::int64_t> pairs_nonblind;
    std::vector<double> mean_estimate_blind;    // averaged over trials
    std::vector<double> mean_estimate_nonblind;
    double aggregate_mse_blind = 0.0; // mean over non-empty lags and trials
    double aggregate_mse_nonblind = 0.0;
    double ci_halfwidth_blind = 0.0; // 95% normal CI on the aggregate, over trials
    double ci_halfwidth_nonblind = 0.0;
    std::int64_t trials = 0;
    std::int64_t snapshots = 0;
};

SchemeComparison compare_schemes(const SignalSpec& spec, const CoprimeConfig& config,
                                 std::int64_t snapshot_count, std::int64_t trials,
                                 std::uint64_t seed, bool fixed_jitter = false);

} // namespace coprime
