#pragma once

#include <cstdint>
#include <vector>

#include "coprime/core_model.hpp"

namespace coprime {

enum class WeightScheme : std::uint8_t {
    UnmappedJittered,  // exact rational lags, one raw grid
    MappedBlind,       // integer lags, ideal pairing with coincidences deduplicated
    MappedNonBlind,    // integer lags, closed form of the mapped jittered pairing
    EnumerationOracle, // integer lags, brute-force count on a concrete grid
};

enum class EstimationScheme { Blind, NonBlind };

/// Contributor counts z(l) per lag.
///
/// Counting convention (fixed across all tables): a contributor at lag
/// l != 0 is an ordered sample pair, so (b,a) lands at -l and z(l) = z(-l);
/// at l = 0 every self pair (a,a) and every unordered near-coincident pair
/// is counted once.
struct WeightTable {
    WeightScheme scheme = WeightScheme::EnumerationOracle;
    CoprimeConfig config;
    std::vector<Rational> lags; // sorted ascending; integral for mapped tables
    std::vector<std::int64_t> counts;

    /// Set by weight_unmapped when the grid failed the genericity check.
    bool genericity_warning = false;
    /// Integer lags present in the ideal cross-only set but not covered by a
    /// band expression of the closed form; their counts were filled by
    /// enumeration. Empty whenever the band formulas tile the cross set.
    std::vector<std::int64_t> formula_gaps;

    std::int64_t count_at(const Rational& lag) const;
    std::int64_t total() const;
};

/// Contributor count per distinct exact (unmapped) lag of one jittered grid.
/// Generic jitter gives z(0) = rM + rN and z = 1 elsewhere; a degenerate grid
/// still produces its table but carries genericity_warning.
WeightTable weight_unmapped(const PerturbedGrid& grid);

/// Closed-form non-blind weights over integer lags |l| <= rMN - 1 (the mapped
/// pairing that knows the true sampling instants). Jitter-invariant under
/// generic jitter.
WeightTable weight_mapped_nonblind(const CoprimeConfig& config);

/// Blind weights over integer lags: exhaustive pairing of the ideal sampler
/// with the r coincident instants {cMN} deduplicated.
WeightTable weight_mapped_blind(const CoprimeConfig& config);

/// Brute-force oracle on a concrete grid. NonBlind maps every exact pair
/// difference of all rM + rN perturbed samples through [l-1/2, l+1/2) -> l;
/// Blind pairs ideal indices after discarding the N-side duplicate at each
/// coincidence.
WeightTable weight_by_enumeration(const PerturbedGrid& grid, EstimationScheme scheme);

/// Exact value of r^2(2M+2N-1)/2 + r/2: the contributor surplus of the
/// non-blind pairing over the blind one, summed over lags 0..rMN-1.
std::int64_t additional_contributors(const CoprimeConfig& config);

} // namespace coprime
