#include "coprime/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "coprime/errors.hpp"

namespace coprime {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v, const char* field) {
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    } catch (const ParseError&) {
    }
    throw ParseError(std::string(field) + " must be an integer or a \"p/q\" string");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

RunConfig parse_run_config(const json& j) {
    if (!j.is_object()) throw ParseError("config root must be a JSON object");
    for (const char* field : {"M", "N", "r"})
        if (!j.contains(field) || !j.at(field).is_number_integer())
            throw ParseError(std::string("config field '") + field + "' missing or not an integer");

    RunConfig run;
    const Rational rho = j.contains("rho") ? rational_from_json(j.at("rho"), "rho") : Rational(0);
    const std::int64_t Q = j.value("Q", std::int64_t{4096});
    run.config = validate_config(j.at("M").get<std::int64_t>(), j.at("N").get<std::int64_t>(),
                                 j.at("r").get<std::int64_t>(), rho, Q);
    run.seed = j.value("seed", std::uint64_t{0});
    run.snapshots = j.value("snapshots", std::int64_t{100});
    run.trials = j.value("trials", std::int64_t{1});
    run.fixed_jitter = j.value("fixed_jitter", false);

    if (j.contains("signal")) {
        const json& sig = j.at("signal");
        if (!sig.is_object() || !sig.contains("components") || !sig.at("components").is_array())
            throw ParseError("signal must be an object with a components array");
        SignalSpec spec;
        spec.noise_sigma = sig.value("noise_sigma", 0.0);
        if (spec.noise_sigma < 0) throw ParseError("noise_sigma must be >= 0");
        for (const json& c : sig.at("components")) {
            SignalComponent comp;
            comp.amplitude = c.value("a", 1.0);
            comp.frequency = c.value("f", 0.0);
            comp.phase_seed = c.value("phase_seed", std::uint64_t{0});
            if (comp.frequency < 0.0 || comp.frequency >= 0.5)
                throw ParseError("component frequency must lie in [0, 1/2)");
            spec.components.push_back(comp);
        }
        run.signal = std::move(spec);
    }
    return run;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("config file '" + path + "': " + e.what());
    }
    return parse_run_config(j);
}

json config_to_json(const CoprimeConfig& config, std::uint64_t seed) {
    return json{{"M", config.M},   {"N", config.N},           {"r", config.r},
                {"rho", config.rho.to_string()}, {"Q", config.Q}, {"seed", seed}};
}

json prop1_report_to_json(const Prop1Report& report) {
    json claims = json::array();
    for (const auto& c : report.claims)
        claims.push_back(
            {{"id", c.id}, {"expected", c.expected}, {"observed", c.observed}, {"holds", c.holds}});
    json violations = json::array();
    for (const auto& w : report.violations) {
        auto entry = [](const DifferenceEntry& e) {
            static const char* names[] = {"self_m_pos", "self_m_neg", "self_n_pos",
                                          "self_n_neg", "cross_pos",  "cross_neg"};
            return json{{"kind", names[static_cast<int>(e.kind)]},
                        {"idx_a", e.idx_a},
                        {"idx_b", e.idx_b},
                        {"value", e.value.to_string()}};
        };
        violations.push_back({{"claim", w.claim_id}, {"a", entry(w.a)}, {"b", entry(w.b)}});
    }
    return json{{"claims", claims}, {"violations", violations}, {"all_hold", report.all_hold()}};
}

json genericity_to_json(const std::vector<GenericityViolation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        json item{{"condition", to_string(v.condition)},
                  {"indices", {v.indices[0], v.indices[1], v.indices[2], v.indices[3]}}};
        if (v.condition == GenericityCondition::SelfCrossCollision)
            item["self_side"] = v.self_side == SamplerSide::MSide ? "M" : "N";
        out.push_back(std::move(item));
    }
    return out;
}

json complexity_to_json(const ComplexityReport& report) {
    json per_lag = json::array();
    for (std::size_t l = 0; l < report.multiplications.size(); ++l)
        per_lag.push_back({{"l", static_cast<std::int64_t>(l)},
                           {"m", report.multiplications[l]},
                           {"a", report.additions[l]}});
    return json{{"scheme", report.scheme == EstimationScheme::Blind ? "blind" : "nonblind"},
                {"C_M", report.total_multiplications},
                {"C_A", report.total_additions},
                {"per_lag", per_lag}};
}

const char* scheme_name(WeightScheme scheme) {
    switch (scheme) {
    case WeightScheme::UnmappedJittered: return "unmapped";
    case WeightScheme::MappedBlind: return "blind";
    case WeightScheme::MappedNonBlind: return "nonblind";
    case WeightScheme::EnumerationOracle: return "enumeration";
    }
    return "?";
}

std::string weight_table_to_csv(const WeightTable& table) {
    std::ostringstream out;
    out << "lag,count,scheme,M,N,r\n";
    for (std::size_t i = 0; i < table.lags.size(); ++i)
        out << table.lags[i].to_string() << ',' << table.counts[i] << ','
            << scheme_name(table.scheme) << ',' << table.config.M << ',' << table.config.N << ','
            << table.config.r << '\n';
    return out.str();
}

std::string comparison_to_csv(const SchemeComparison& cmp) {
    std::ostringstream out;
    out << "lag,estimate_blind,estimate_nonblind,truth,pairs_blind,pairs_nonblind\n";
    for (std::size_t i = 0; i < cmp.lags.size(); ++i)
        out << cmp.lags[i] << ',' << format_double(cmp.mean_estimate_blind[i]) << ','
            << format_double(cmp.mean_estimate_nonblind[i]) << ',' << format_double(cmp.truth[i])
            << ',' << cmp.pairs_blind[i] << ',' << cmp.pairs_nonblind[i] << '\n';
    return out.str();
}

json comparison_summary_to_json(const SchemeComparison& cmp) {
    return json{{"mse_blind", cmp.aggregate_mse_blind},
                {"mse_nonblind", cmp.aggregate_mse_nonblind},
                {"ci",
                 {{"blind_halfwidth", cmp.ci_halfwidth_blind},
                  {"nonblind_halfwidth", cmp.ci_halfwidth_nonblind},
                  {"level", 0.95}}},
                {"trials", cmp.trials},
                {"snapshots", cmp.snapshots}};
}

json make_manifest(const std::string& command, const CoprimeConfig& config, std::uint64_t seed,
                   const std::vector<std::string>& outputs) {
    char stamp[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return json{{"command", command},
                {"config", config_to_json(config, seed)},
                {"outputs", outputs},
                {"tool_version", COPRIME_VERSION},
                {"timestamp", stamp}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw Error("failed writing output file '" + path + "'");
}

} // namespace coprime
