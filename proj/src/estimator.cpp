#include "coprime/estimator.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "coprime/errors.hpp"
#include "coprime/parallel.hpp"

namespace coprime {

int max_threads() {
    if (const char* env = std::getenv("COPRIME_JITTER_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller on our own uniform draws, so batches are identical across
// standard-library implementations.
double normal(std::mt19937_64& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

SnapshotBatch generate_snapshots(const SignalSpec& spec, const CoprimeConfig& config,
                                 std::int64_t snapshot_count, std::uint64_t seed,
                                 bool fixed_jitter) {
    if (snapshot_count < 1) throw RangeError("snapshot count must be >= 1");
    SnapshotBatch batch;
    batch.config = config;
    batch.snapshots.reserve(static_cast<std::size_t>(snapshot_count));

    JitterRealization frozen;
    if (fixed_jitter) frozen = draw_jitter(config, mix_seed(seed, 0));

    for (std::int64_t s = 0; s < snapshot_count; ++s) {
        Snapshot snap;
        snap.grid = build_grid(config, fixed_jitter ? frozen
                                                    : draw_jitter(config, mix_seed(seed, 3 * static_cast<std::uint64_t>(s))));

        std::vector<double> phases(spec.components.size());
        const std::uint64_t phase_base = mix_seed(seed, 3 * static_cast<std::uint64_t>(s) + 1);
        for (std::size_t i = 0; i < spec.components.size(); ++i) {
            if (spec.components[i].frequency == 0.0) continue; // DC: no phase draw
            std::mt19937_64 rng(mix_seed(phase_base, spec.components[i].phase_seed + i));
            phases[i] = 2.0 * std::numbers::pi * uniform01(rng);
        }

        std::mt19937_64 noise_rng(mix_seed(seed, 3 * static_cast<std::uint64_t>(s) + 2));
        auto sample = [&](const Rational& t) {
            const double time = t.to_double();
            double x = 0.0;
            for (std::size_t i = 0; i < spec.components.size(); ++i) {
                const auto& c = spec.components[i];
                x += c.amplitude *
                     std::cos(2.0 * std::numbers::pi * c.frequency * time + phases[i]);
            }
            if (spec.noise_sigma > 0.0) x += spec.noise_sigma * normal(noise_rng);
            return x;
        };
        snap.x1.reserve(snap.grid.t1.size());
        snap.x2.reserve(snap.grid.t2.size());
        for (const auto& t : snap.grid.t1) snap.x1.push_back(sample(t));
        for (const auto& t : snap.grid.t2) snap.x2.push_back(sample(t));
        batch.snapshots.push_back(std::move(snap));
    }
    return batch;
}

AutocorrEstimate estimate_autocorrelation(const SnapshotBatch& batch, EstimationScheme scheme) {
    if (batch.snapshots.empty()) throw RangeError("batch is empty");
    const CoprimeConfig& config = batch.config;
    const std::int64_t span = config.snapshot_span();
    std::vector<double> sums(static_cast<std::size_t>(span), 0.0);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(span), 0);

    for (const Snapshot& snap : batch.snapshots) {
        if (scheme == EstimationScheme::Blind) {
            // The blind estimator pairs by ideal index and treats the r
            // coincident instants as one sample (N-side duplicate dropped).
            std::vector<std::pair<std::int64_t, double>> kept;
            for (std::int64_t n = 0; n < config.samples1(); ++n)
                kept.emplace_back(config.M * n, snap.x1[static_cast<std::size_t>(n)]);
            for (std::int64_t m = 0; m < config.samples2(); ++m)
                if (m % config.M != 0)
                    kept.emplace_back(config.N * m, snap.x2[static_cast<std::size_t>(m)]);
            for (const auto& [ta, va] : kept) {
                sums[0] += va * va;
                ++counts[0];
                for (const auto& [tb, vb] : kept) {
                    const std::int64_t l = ta - tb;
                    if (l > 0 && l < span) {
                        sums[static_cast<std::size_t>(l)] += va * vb;
                        ++counts[static_cast<std::size_t>(l)];
                    }
                }
            }
        } else {
            std::vector<std::pair<Rational, double>> samples;
            for (std::size_t n = 0; n < snap.grid.t1.size(); ++n)
                samples.emplace_back(snap.grid.t1[n], snap.x1[n]);
            for (std::size_t m = 0; m < snap.grid.t2.size(); ++m)
                samples.emplace_back(snap.grid.t2[m], snap.x2[m]);
            for (std::size_t a = 0; a < samples.size(); ++a) {
                sums[0] += samples[a].second * samples[a].second;
                ++counts[0];
                for (std::size_t b = 0; b < samples.size(); ++b) {
                    if (a == b) continue;
                    const std::int64_t l = (samples[a].first - samples[b].first).round_half_up();
                    if (l == 0) {
                        if (a < b) { // near-coincident pair, counted once
                            sums[0] += samples[a].second * samples[b].second;
                            ++counts[0];
                        }
                    } else if (l > 0 && l < span) {
                        sums[static_cast<std::size_t>(l)] += samples[a].second * samples[b].second;
                        ++counts[static_cast<std::size_t>(l)];
                    }
                }
            }
        }
    }

    AutocorrEstimate est;
    for (std::int64_t l = 0; l < span; ++l) {
        est.lags.push_back(l);
        const std::int64_t c = counts[static_cast<std::size_t>(l)];
        est.pair_counts.push_back(c);
        if (c == 0) {
            est.values.push_back(0.0);
            est.empty_lags.push_back(l);
        } else {
            est.values.push_back(sums[static_cast<std::size_t>(l)] / static_cast<double>(c));
        }
    }
    return est;
}

double analytic_autocorrelation(const SignalSpec& spec, std::int64_t lag) {
    double r = 0.0;
    for (const auto& c : spec.components) {
        if (c.frequency == 0.0) {
            r += c.amplitude * c.amplitude; // DC component, no phase averaging
        } else {
            r += 0.5 * c.amplitude * c.amplitude *
                 std::cos(2.0 * std::numbers::pi * c.frequency * static_cast<double>(lag));
        }
    }
    if (lag == 0) r += spec.noise_sigma * spec.noise_sigma;
    return r;
}

SchemeComparison compare_schemes(const SignalSpec& spec, const CoprimeConfig& config,
                                 std::int64_t snapshot_count, std::int64_t trials,
                                 std::uint64_t seed, bool fixed_jitter) {
    if (trials < 1) throw RangeError("trial count must be >= 1");
    const std::int64_t span = config.snapshot_span();

    struct TrialResult {
        AutocorrEstimate blind;
        AutocorrEstimate nonblind;
    };
    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    parallel_for(trials, [&](std::int64_t t) {
        const SnapshotBatch batch = generate_snapshots(
            spec, config, snapshot_count, mix_seed(seed, 0x7472 + static_cast<std::uint64_t>(t)),
            fixed_jitter);
        results[static_cast<std::size_t>(t)] = {
            estimate_autocorrelation(batch, EstimationScheme::Blind),
            estimate_autocorrelation(batch, EstimationScheme::NonBlind)};
    });

    SchemeComparison cmp;
    cmp.trials = trials;
    cmp.snapshots = snapshot_count;
    cmp.lags.resize(static_cast<std::size_t>(span));
    cmp.truth.resize(static_cast<std::size_t>(span));
    cmp.mse_blind.assign(static_cast<std::size_t>(span), 0.0);
    cmp.mse_nonblind.assign(static_cast<std::size_t>(span), 0.0);
    cmp.mean_estimate_blind.assign(static_cast<std::size_t>(span), 0.0);
    cmp.mean_estimate_nonblind.assign(static_cast<std::size_t>(span), 0.0);
    for (std::int64_t l = 0; l < span; ++l) {
        cmp.lags[static_cast<std::size_t>(l)] = l;
        cmp.truth[static_cast<std::size_t>(l)] = analytic_autocorrelation(spec, l);
    }
    const auto& first = results.front();
    for (std::int64_t l = 0; l < span; ++l) {
        cmp.pairs_blind.push_back(first.blind.pair_counts[static_cast<std::size_t>(l)] /
                                  snapshot_count);
        cmp.pairs_nonblind.push_back(first.nonblind.pair_counts[static_cast<std::size_t>(l)] /
                                     snapshot_count);
    }

    auto aggregate = [&](auto member, std::vector<double>& per_lag_mse,
                         std::vector<double>& mean_est, double& agg, double& ci) {
        std::vector<double> trial_agg(static_cast<std::size_t>(trials), 0.0);
        for (std::int64_t t = 0; t < trials; ++t) {
            const AutocorrEstimate& est = results[static_cast<std::size_t>(t)].*member;
            std::int64_t live = 0;
            double sum_sq = 0.0;
            for (std::int64_t l = 0; l < span; ++l) {
                if (est.pair_counts[static_cast<std::size_t>(l)] == 0) continue;
                const double err =
                    est.values[static_cast<std::size_t>(l)] - cmp.truth[static_cast<std::size_t>(l)];
                per_lag_mse[static_cast<std::size_t>(l)] += err * err / static_cast<double>(trials);
                mean_est[static_cast<std::size_t>(l)] +=
                    est.values[static_cast<std::size_t>(l)] / static_cast<double>(trials);
                sum_sq += err * err;
                ++live;
            }
            trial_agg[static_cast<std::size_t>(t)] = live > 0 ? sum_sq / static_cast<double>(live) : 0.0;
        }
        double mean = 0.0;
        for (const double v : trial_agg) mean += v;
        mean /= static_cast<double>(trials);
        double var = 0.0;
        for (const double v : trial_agg) var += (v - mean) * (v - mean);
        var = trials > 1 ? var / static_cast<double>(trials - 1) : 0.0;
        agg = mean;
        ci = 1.96 * std::sqrt(var / static_cast<double>(trials));
    };
    aggregate(&TrialResult::blind, cmp.mse_blind, cmp.mean_estimate_blind,
              cmp.aggregate_mse_blind, cmp.ci_halfwidth_blind);
    aggregate(&TrialResult::nonblind, cmp.mse_nonblind, cmp.mean_estimate_nonblind,
              cmp.aggregate_mse_nonblind, cmp.ci_halfwidth_nonblind);
    return cmp;
}

} // namespace coprime
