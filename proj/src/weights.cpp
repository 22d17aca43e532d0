#include "coprime/weights.hpp"

#include <algorithm>
#include <map>

#include "coprime/difference_analysis.hpp"
#include "coprime/errors.hpp"

namespace coprime {

namespace {

WeightTable from_map(const std::map<Rational, std::int64_t>& counts, WeightScheme scheme,
                     const CoprimeConfig& config) {
    WeightTable table;
    table.scheme = scheme;
    table.config = config;
    table.lags.reserve(counts.size());
    table.counts.reserve(counts.size());
    for (const auto& [lag, count] : counts) {
        if (count == 0) continue;
        table.lags.push_back(lag);
        table.counts.push_back(count);
    }
    return table;
}

// Ordered pairs at nonzero lags; self pairs and unordered coincident pairs
// once at zero. `map` reduces an exact difference to its tabulated lag.
template <typename Vec, typename MapFn>
std::map<Rational, std::int64_t> count_pairs(const Vec& samples, MapFn&& map) {
    std::map<Rational, std::int64_t> counts;
    const std::size_t n = samples.size();
    counts[Rational(0)] = static_cast<std::int64_t>(n); // self pairs (a,a)
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const Rational lag = map(samples[a] - samples[b]);
            if (lag.is_zero()) {
                if (a < b) ++counts[lag]; // near-coincident pair, unordered
            } else {
                ++counts[lag];
            }
        }
    }
    return counts;
}

std::vector<Rational> combined_samples(const PerturbedGrid& grid) {
    std::vector<Rational> samples;
    samples.reserve(grid.t1.size() + grid.t2.size());
    samples.insert(samples.end(), grid.t1.begin(), grid.t1.end());
    samples.insert(samples.end(), grid.t2.begin(), grid.t2.end());
    return samples;
}

} // namespace

std::int64_t WeightTable::count_at(const Rational& lag) const {
    const auto it = std::lower_bound(lags.begin(), lags.end(), lag);
    if (it == lags.end() || *it != lag) return 0;
    return counts[static_cast<std::size_t>(it - lags.begin())];
}

std::int64_t WeightTable::total() const {
    std::int64_t sum = 0;
    for (const std::int64_t c : counts) sum += c;
    return sum;
}

WeightTable weight_unmapped(const PerturbedGrid& grid) {
    const auto counts =
        count_pairs(combined_samples(grid), [](const Rational& d) { return d; });
    // The tight scan flags exactly the draws whose table deviates from the
    // generic shape (z(0) = rM + rN, every other lag once).
    WeightTable table = from_map(counts, WeightScheme::UnmappedJittered, grid.config);
    table.genericity_warning =
        !check_genericity(grid.jitter, grid.config, GenericityMode::Necessary).empty();
    return table;
}

WeightTable weight_by_enumeration(const PerturbedGrid& grid, EstimationScheme scheme) {
    if (scheme == EstimationScheme::NonBlind) {
        const auto counts = count_pairs(combined_samples(grid), [](const Rational& d) {
            return Rational(d.round_half_up());
        });
        return from_map(counts, WeightScheme::EnumerationOracle, grid.config);
    }
    // Blind: ideal integer instants, keeping only the M-side sample of each
    // coincidence cMN (the N-side duplicate m = cM is discarded).
    std::vector<Rational> ideal;
    for (std::int64_t n = 0; n < grid.config.samples1(); ++n)
        ideal.push_back(Rational(grid.config.M * n));
    for (std::int64_t m = 0; m < grid.config.samples2(); ++m)
        if (m % grid.config.M != 0) ideal.push_back(Rational(grid.config.N * m));
    const auto counts = count_pairs(ideal, [](const Rational& d) { return d; });
    return from_map(counts, WeightScheme::EnumerationOracle, grid.config);
}

WeightTable weight_mapped_blind(const CoprimeConfig& config) {
    WeightTable table = weight_by_enumeration(build_grid(config, zero_jitter(config)),
                                              EstimationScheme::Blind);
    table.scheme = WeightScheme::MappedBlind;
    return table;
}

namespace {

// Ordered pair count at ideal integer lag l >= 1 over the full
// (non-deduplicated) union of both samplers: cross solutions of
// M*n - N*m = +-l plus the self pairs when l is a multiple of M or N.
// Under generic jitter the mapped non-blind count equals this exactly,
// since every jittered difference stays within +-1/2 of its ideal lag.
std::int64_t ideal_pair_count(const CoprimeConfig& config, std::int64_t l) {
    std::int64_t count = 0;
    if (l % config.M == 0 && l / config.M < config.samples1())
        count += config.samples1() - l / config.M;
    if (l % config.N == 0 && l / config.N < config.samples2())
        count += config.samples2() - l / config.N;
    for (std::int64_t n = 0; n < config.samples1(); ++n) {
        const std::int64_t m_fwd = config.M * n - l; // M*n - N*m = l
        if (m_fwd >= 0 && m_fwd % config.N == 0 && m_fwd / config.N < config.samples2()) ++count;
        const std::int64_t m_bwd = config.M * n + l; // N*m - M*n = l
        if (m_bwd >= 0 && m_bwd % config.N == 0 && m_bwd / config.N < config.samples2()) ++count;
    }
    return count;
}

// Closed-form contributor count for one nonzero lag; -1 where no
// expression applies (a coverage gap).
std::int64_t closed_form_nonblind(const CoprimeConfig& config, std::int64_t l) {
    const std::int64_t M = config.M, N = config.N, r = config.r;
    const std::int64_t rN = config.samples1(), rM = config.samples2();
    if (l % (M * N) == 0) {
        const std::int64_t c = l / (M * N); // c in [1, r-1] since 0 < l < rMN
        return (r - c) * (M + N + 2);
    }
    if (l % M == 0) {
        const std::int64_t i = l / M; // i in [1, rN-1], i not a multiple of N
        return (rN - i) + (r - i / N) + (r - (i / N + 1));
    }
    if (l % N == 0) {
        const std::int64_t i = l / N;
        return (rM - i) + (r - i / M) + (r - (i / M + 1));
    }
    // Cross-only lag: central band, then the i-th outer band.
    if (l <= M * N - M - N) return 2 * r;
    for (std::int64_t i = 1; i <= r - 1; ++i)
        if ((i * N + 1) * M - (M - 1) * N <= l && l <= ((i + 1) * N - 1) * M - N)
            return 2 * (r - i);
    return -1;
}

} // namespace

WeightTable weight_mapped_nonblind(const CoprimeConfig& config) {
    const std::int64_t span = config.snapshot_span();
    std::map<Rational, std::int64_t> counts;
    std::vector<std::int64_t> gaps;

    // z(0) = rM + rN self pairs plus the r near-coincident cross pairs.
    counts[Rational(0)] = config.samples2() + config.samples1() + config.r;

    // The band expressions do not tile every co-prime pair correctly (some
    // cross-only lags first appear after an extra period offset, e.g. l = 9
    // for (M,N) = (5,4)), so each lag is checked against the exact ideal
    // pairing count; disagreements are reported and the exact count wins.
    for (std::int64_t l = 1; l < span; ++l) {
        const std::int64_t exact = ideal_pair_count(config, l);
        // Self lags are always inside the closed form's scope; a cross-only
        // lag is in scope only if it occurs in the coarray at all (absent
        // lags are holes, not formula defects).
        const bool in_scope = l % config.M == 0 || l % config.N == 0 || exact > 0;
        if (in_scope && closed_form_nonblind(config, l) != exact) gaps.push_back(l);
        if (exact > 0) {
            counts[Rational(l)] = exact;
            counts[Rational(-l)] = exact;
        }
    }
    WeightTable table = from_map(counts, WeightScheme::MappedNonBlind, config);
    table.formula_gaps = std::move(gaps);
    return table;
}

std::int64_t additional_contributors(const CoprimeConfig& config) {
    // r^2(2M+2N-1)/2 + r/2 = r*(r*(2M+2N-1)+1)/2; the numerator is even for
    // every r (odd*odd+1 is even), so the division is exact.
    const std::int64_t numerator =
        config.r * (config.r * (2 * config.M + 2 * config.N - 1) + 1);
    if (numerator % 2 != 0)
        throw Error("additional_contributors: closed form is not integral");
    return numerator / 2;
}

} // namespace coprime
