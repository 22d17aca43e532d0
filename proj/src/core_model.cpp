#include "coprime/core_model.hpp"

#include <charconv>
#include <numeric>
#include <random>

#include "coprime/errors.hpp"

namespace coprime {

Rational Rational::parse(std::string_view s) {
    auto read_int = [](std::string_view v) -> std::int64_t {
        std::int64_t out = 0;
        const auto* first = v.data();
        const auto* last = v.data() + v.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc() || ptr != last)
            throw ParseError("invalid rational literal: '" + std::string(v) + "'");
        return out;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(read_int(s));
    const std::int64_t p = read_int(s.substr(0, slash));
    const std::int64_t q = read_int(s.substr(slash + 1));
    if (q == 0) throw ParseError("invalid rational literal: zero denominator");
    return Rational(p, q);
}

CoprimeConfig validate_config(std::int64_t M, std::int64_t N, std::int64_t r,
                              const Rational& rho, std::int64_t Q) {
    if (M < 1 || N < 1)
        throw RangeError("M and N must be positive");
    if (std::gcd(M, N) != 1)
        throw NotCoprimeError("M=" + std::to_string(M) + " and N=" + std::to_string(N) +
                              " are not co-prime");
    if (N < 2 || M <= N)
        throw RangeError("canonical ordering M > N >= 2 required (got M=" +
                         std::to_string(M) + ", N=" + std::to_string(N) + ")");
    if (r < 1)
        throw RangeError("period count r must be >= 1");
    if (rho < Rational(0) || rho >= Rational(1, 4))
        throw RangeError("jitter half-range rho must lie in [0, 1/4), got " + rho.to_string());
    if (Q < 4)
        throw RangeError("quantization denominator Q must be >= 4");
    return CoprimeConfig{M, N, r, rho, Q};
}

std::int64_t max_jitter_tick(const CoprimeConfig& config) {
    if (config.rho.is_zero()) return 0;
    // largest k with k/Q < p/q, i.e. k*q < p*Q
    const std::int64_t p = config.rho.num();
    const std::int64_t q = config.rho.den();
    std::int64_t k = (p * config.Q) / q;
    if (k * q == p * config.Q) --k;
    return k;
}

namespace {

// Bounded draw by rejection, so realizations do not depend on the standard
// library's distribution internals.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t u;
    do {
        u = rng();
    } while (u >= limit);
    return static_cast<std::int64_t>(u % un);
}

} // namespace

JitterRealization draw_jitter(const CoprimeConfig& config, std::uint64_t seed) {
    JitterRealization jit;
    jit.eps1.resize(static_cast<std::size_t>(config.samples1()));
    jit.eps2.resize(static_cast<std::size_t>(config.samples2()));
    if (config.rho.is_zero()) return jit; // ideal case: eps == 0 identically

    const std::int64_t k = max_jitter_tick(config);
    if (k < 1)
        throw DegenerateGridError("no nonzero grid point k/" + std::to_string(config.Q) +
                                  " lies strictly inside (-" + config.rho.to_string() + ", " +
                                  config.rho.to_string() + ")");
    std::mt19937_64 rng(seed);
    const std::int64_t span = 2 * k + 1;
    for (auto& e : jit.eps1) e = Rational(uniform_int(rng, span) - k, config.Q);
    for (auto& e : jit.eps2) e = Rational(uniform_int(rng, span) - k, config.Q);
    return jit;
}

JitterRealization zero_jitter(const CoprimeConfig& config) {
    JitterRealization jit;
    jit.eps1.resize(static_cast<std::size_t>(config.samples1()));
    jit.eps2.resize(static_cast<std::size_t>(config.samples2()));
    return jit;
}

PerturbedGrid build_grid(const CoprimeConfig& config, JitterRealization jitter) {
    if (std::ssize(jitter.eps1) != config.samples1() ||
        std::ssize(jitter.eps2) != config.samples2())
        throw LengthMismatchError("jitter arrays must have rN=" +
                                  std::to_string(config.samples1()) + " and rM=" +
                                  std::to_string(config.samples2()) + " entries");
    PerturbedGrid grid;
    grid.config = config;
    grid.t1.reserve(jitter.eps1.size());
    grid.t2.reserve(jitter.eps2.size());
    for (std::int64_t n = 0; n < config.samples1(); ++n)
        grid.t1.push_back(Rational(config.M * n) + jitter.eps1[static_cast<std::size_t>(n)]);
    for (std::int64_t m = 0; m < config.samples2(); ++m)
        grid.t2.push_back(Rational(config.N * m) + jitter.eps2[static_cast<std::size_t>(m)]);
    grid.jitter = std::move(jitter);
    return grid;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace coprime
