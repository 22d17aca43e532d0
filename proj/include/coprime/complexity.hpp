#pragma once

#include <cstdint>
#include <vector>

#include "coprime/weights.hpp"

namespace coprime {

/// Multiplication/adder counts for autocorrelation estimation, per mapped lag
/// l in [0, rMN-1]: m(l) = z(l) and a(l) = z(l) - 1 wherever z(l) > 0.
struct ComplexityReport {
    EstimationScheme scheme = EstimationScheme::NonBlind;
    CoprimeConfig config;
    std::vector<std::int64_t> multiplications; // index l
    std::vector<std::int64_t> additions;
    std::int64_t total_multiplications = 0; // C_M
    std::int64_t total_additions = 0;       // C_A
};

ComplexityReport complexity_report(const CoprimeConfig& config, EstimationScheme scheme);

} // namespace coprime
