#include "coprime/complexity.hpp"

namespace coprime {

ComplexityReport complexity_report(const CoprimeConfig& config, EstimationScheme scheme) {
    const WeightTable table = scheme == EstimationScheme::Blind
                                  ? weight_mapped_blind(config)
                                  : weight_mapped_nonblind(config);
    ComplexityReport report;
    report.scheme = scheme;
    report.config = config;
    const std::int64_t span = config.snapshot_span();
    report.multiplications.resize(static_cast<std::size_t>(span), 0);
    report.additions.resize(static_cast<std::size_t>(span), 0);
    for (std::int64_t l = 0; l < span; ++l) {
        const std::int64_t z = table.count_at(Rational(l));
        if (z <= 0) continue; // empty lag: no multiplier, no phantom adder
        report.multiplications[static_cast<std::size_t>(l)] = z;
        report.additions[static_cast<std::size_t>(l)] = z - 1;
        report.total_multiplications += z;
        report.total_additions += z - 1;
    }
    return report;
}

} // namespace coprime
