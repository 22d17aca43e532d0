#pragma once

#include <cstdint>
#include <vector>

#include "coprime/rational.hpp"

namespace coprime {

/// Geometry of a multi-period co-prime sampler pair.
///
/// Sub-sampler 1 takes rN samples at spacing M, sub-sampler 2 takes rM
/// samples at spacing N; one snapshot spans rMN Nyquist periods (d is
/// normalized to 1 throughout). Jitter values live on the exact grid k/Q
/// strictly inside (-rho, rho), so all later set arithmetic is exact.
struct CoprimeConfig {
    std::int64_t M = 0;
    std::int64_t N = 0;
    std::int64_t r = 0;
    Rational rho;
    std::int64_t Q = 4096;

    std::int64_t samples1() const { return r * N; } // index range of n
    std::int64_t samples2() const { return r * M; } // index range of m
    std::int64_t snapshot_span() const { return r * M * N; }
};

/// Checks co-primality and ranges; the only way to obtain a valid config.
/// Throws NotCoprimeError or RangeError.
CoprimeConfig validate_config(std::int64_t M, std::int64_t N, std::int64_t r,
                              const Rational& rho, std::int64_t Q = 4096);

/// Per-instant jitters eps1(n), eps2(m), each an exact multiple of 1/Q with
/// |value| < rho.
struct JitterRealization {
    std::vector<Rational> eps1; // size rN
    std::vector<Rational> eps2; // size rM
};

/// Largest k >= 0 with k/Q < rho (the admissible jitter ticks are [-k, k]).
std::int64_t max_jitter_tick(const CoprimeConfig& config);

/// Draws i.i.d. uniform jitter over the admissible grid points; deterministic
/// given seed, identical across platforms. rho = 0 yields all zeros. Throws
/// DegenerateGridError when rho > 0 but only the zero tick is admissible.
JitterRealization draw_jitter(const CoprimeConfig& config, std::uint64_t seed);

/// All-zero jitter (the ideal sampler).
JitterRealization zero_jitter(const CoprimeConfig& config);

/// Ideal and perturbed sampling instants of both sub-samplers.
struct PerturbedGrid {
    CoprimeConfig config;
    JitterRealization jitter;
    std::vector<Rational> t1; // t1[n] = M*n + eps1(n)
    std::vector<Rational> t2; // t2[m] = N*m + eps2(m)
};

/// Throws LengthMismatchError if the jitter arrays do not have rN / rM entries.
PerturbedGrid build_grid(const CoprimeConfig& config, JitterRealization jitter);

/// splitmix64 step; used to derive independent sub-seeds deterministically.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace coprime
