#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "coprime/complexity.hpp"
#include "coprime/difference_analysis.hpp"
#include "coprime/estimator.hpp"
#include "coprime/weights.hpp"

namespace coprime {

/// Everything a run needs, parsed from one JSON config file:
///   {"M":4, "N":3, "r":3, "rho":"1/8", "Q":4096, "seed":7,
///    "signal":{"components":[{"a":1.0,"f":0.37}], "noise_sigma":0.1},
///    "snapshots":200, "trials":50, "fixed_jitter":false}
/// Exact-rational fields are serialized as "p/q" strings.
struct RunConfig {
    CoprimeConfig config;
    std::uint64_t seed = 0;
    std::optional<SignalSpec> signal;
    std::int64_t snapshots = 100;
    std::int64_t trials = 1;
    bool fixed_jitter = false;
};

/// Throws ParseError on malformed input, RangeError/NotCoprimeError on
/// invalid parameters.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const nlohmann::json& j);

nlohmann::json config_to_json(const CoprimeConfig& config, std::uint64_t seed);
nlohmann::json prop1_report_to_json(const Prop1Report& report);
nlohmann::json genericity_to_json(const std::vector<GenericityViolation>& violations);
nlohmann::json complexity_to_json(const ComplexityReport& report);

/// CSV with header lag,count,scheme,M,N,r. Mapped lags print as integers,
/// unmapped ones as p/q.
std::string weight_table_to_csv(const WeightTable& table);
const char* scheme_name(WeightScheme scheme);

/// CSV with header lag,estimate_blind,estimate_nonblind,truth,pairs_blind,
/// pairs_nonblind (estimates at 17 significant digits).
std::string comparison_to_csv(const SchemeComparison& cmp);
nlohmann::json comparison_summary_to_json(const SchemeComparison& cmp);

/// Re-run record written next to every output file.
nlohmann::json make_manifest(const std::string& command, const CoprimeConfig& config,
                             std::uint64_t seed, const std::vector<std::string>& outputs);

void write_text_file(const std::string& path, const std::string& content);

} // namespace coprime
