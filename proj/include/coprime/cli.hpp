#pragma once

#include <optional>
#include <string>

#include "coprime/io.hpp"

namespace coprime::cli {

/// Exit-code contract shared by all subcommands: 0 success, 1 user/config
/// error, 2 verification failure (formula vs. enumeration mismatch under
/// verified genericity).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitVerifyFailed = 2;

struct VerifyOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed; // overrides the config file seed
    std::int64_t seeds = 1;            // consecutive seeds starting at the base
    std::optional<std::string> out;    // JSON report path; stdout if absent
};

struct WeightsOptions {
    std::string config_path;
    std::string scheme = "nonblind"; // blind | nonblind | both
    std::optional<std::string> sweep; // e.g. "r=1..4": one CSV per r
    std::optional<std::string> out;
};

struct EstimateOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out; // per-lag CSV; summary lands at <out stem>.summary.json
};

struct ComplexityOptions {
    std::string config_path;
    std::optional<std::string> out;
};

int run_verify(const VerifyOptions& opts);
int run_weights(const WeightsOptions& opts);
int run_estimate(const EstimateOptions& opts);
int run_complexity(const ComplexityOptions& opts);

/// Full argv entry point used by the coprime-jitter binary.
int run(int argc, char** argv);

} // namespace coprime::cli
