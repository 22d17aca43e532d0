#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coprime/complexity.hpp"
#include "coprime/difference_analysis.hpp"
#include "coprime/errors.hpp"
#include "coprime/estimator.hpp"
#include "coprime/weights.hpp"

namespace py = pybind11;
using namespace coprime;

namespace {

Rational rational_from(const py::object& obj) {
    if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
    if (py::isinstance<py::int_>(obj)) return Rational(obj.cast<std::int64_t>());
    if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
    throw py::type_error("expected int, 'p/q' string or Rational");
}

EstimationScheme scheme_from(const std::string& name) {
    if (name == "blind") return EstimationScheme::Blind;
    if (name == "nonblind") return EstimationScheme::NonBlind;
    throw py::value_error("scheme must be 'blind' or 'nonblind'");
}

GenericityMode mode_from(const std::string& name) {
    if (name == "sufficient") return GenericityMode::Sufficient;
    if (name == "necessary") return GenericityMode::Necessary;
    throw py::value_error("mode must be 'sufficient' or 'necessary'");
}

} // namespace

PYBIND11_MODULE(_coprime_jitter, m) {
    m.doc() = "Multi-period co-prime sampler analysis under sampling-time jitter";

    py::register_exception<NotCoprimeError>(m, "NotCoprimeError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<DegenerateGridError>(m, "DegenerateGridError", PyExc_ValueError);
    py::register_exception<LengthMismatchError>(m, "LengthMismatchError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& v) { return rational_from(v); }))
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::to_string)
        .def("__repr__",
             [](const Rational& r) { return "Rational('" + r.to_string() + "')"; })
        .def("__eq__", [](const Rational& a, const py::object& b) { return a == rational_from(b); })
        .def("__lt__", [](const Rational& a, const py::object& b) { return a < rational_from(b); })
        .def("__hash__", [](const Rational& r) { return std::hash<Rational>{}(r); });

    py::class_<CoprimeConfig>(m, "CoprimeConfig")
        .def_readonly("M", &CoprimeConfig::M)
        .def_readonly("N", &CoprimeConfig::N)
        .def_readonly("r", &CoprimeConfig::r)
        .def_readonly("rho", &CoprimeConfig::rho)
        .def_readonly("Q", &CoprimeConfig::Q)
        .def_property_readonly("samples1", &CoprimeConfig::samples1)
        .def_property_readonly("samples2", &CoprimeConfig::samples2)
        .def_property_readonly("snapshot_span", &CoprimeConfig::snapshot_span)
        .def("__repr__", [](const CoprimeConfig& c) {
            return "CoprimeConfig(M=" + std::to_string(c.M) + ", N=" + std::to_string(c.N) +
                   ", r=" + std::to_string(c.r) + ", rho=" + c.rho.to_string() +
                   ", Q=" + std::to_string(c.Q) + ")";
        });

    m.def(
        "validate_config",
        [](std::int64_t M, std::int64_t N, std::int64_t r, const py::object& rho, std::int64_t Q) {
            return validate_config(M, N, r, rational_from(rho), Q);
        },
        py::arg("M"), py::arg("N"), py::arg("r"), py::arg("rho"), py::arg("Q") = 4096);

    py::class_<JitterRealization>(m, "JitterRealization")
        .def_readonly("eps1", &JitterRealization::eps1)
        .def_readonly("eps2", &JitterRealization::eps2);
    m.def("draw_jitter", &draw_jitter, py::arg("config"), py::arg("seed"));
    m.def("zero_jitter", &zero_jitter, py::arg("config"));

    py::class_<PerturbedGrid>(m, "PerturbedGrid")
        .def_readonly("config", &PerturbedGrid::config)
        .def_readonly("jitter", &PerturbedGrid::jitter)
        .def_readonly("t1", &PerturbedGrid::t1)
        .def_readonly("t2", &PerturbedGrid::t2);
    m.def("build_grid", &build_grid, py::arg("config"), py::arg("jitter"));

    m.def(
        "check_genericity",
        [](const JitterRealization& jitter, const CoprimeConfig& config, const std::string& mode) {
            py::list out;
            for (const auto& v : check_genericity(jitter, config, mode_from(mode)))
                out.append(py::make_tuple(std::string(to_string(v.condition)),
                                          py::make_tuple(v.indices[0], v.indices[1], v.indices[2],
                                                         v.indices[3])));
            return out;
        },
        py::arg("jitter"), py::arg("config"), py::arg("mode") = "sufficient");

    py::class_<ClaimRecord>(m, "ClaimRecord")
        .def_readonly("id", &ClaimRecord::id)
        .def_readonly("expected", &ClaimRecord::expected)
        .def_readonly("observed", &ClaimRecord::observed)
        .def_readonly("holds", &ClaimRecord::holds)
        .def("__repr__", [](const ClaimRecord& c) {
            return "ClaimRecord(id=" + std::to_string(c.id) +
                   ", expected=" + std::to_string(c.expected) +
                   ", observed=" + std::to_string(c.observed) +
                   ", holds=" + (c.holds ? std::string("True") : std::string("False")) + ")";
        });
    py::class_<Prop1Report>(m, "Prop1Report")
        .def_property_readonly("claims",
                               [](const Prop1Report& r) {
                                   return std::vector<ClaimRecord>(r.claims.begin(),
                                                                   r.claims.end());
                               })
        .def_property_readonly("violation_count",
                               [](const Prop1Report& r) { return r.violations.size(); })
        .def("all_hold", &Prop1Report::all_hold);
    m.def("verify_proposition1", &verify_proposition1, py::arg("config"), py::arg("jitter"));
    m.def("prop1_expected", &prop1_expected, py::arg("config"), py::arg("claim_id"));

    py::class_<WeightTable>(m, "WeightTable")
        .def_readonly("lags", &WeightTable::lags)
        .def_readonly("counts", &WeightTable::counts)
        .def_readonly("genericity_warning", &WeightTable::genericity_warning)
        .def_readonly("formula_gaps", &WeightTable::formula_gaps)
        .def("count_at",
             [](const WeightTable& t, const py::object& lag) {
                 return t.count_at(rational_from(lag));
             })
        .def("total", &WeightTable::total);
    m.def("weight_unmapped", &weight_unmapped, py::arg("grid"));
    m.def("weight_mapped_nonblind", &weight_mapped_nonblind, py::arg("config"));
    m.def("weight_mapped_blind", &weight_mapped_blind, py::arg("config"));
    m.def(
        "weight_by_enumeration",
        [](const PerturbedGrid& grid, const std::string& scheme) {
            return weight_by_enumeration(grid, scheme_from(scheme));
        },
        py::arg("grid"), py::arg("scheme"));
    m.def("additional_contributors", &additional_contributors, py::arg("config"));

    py::class_<ComplexityReport>(m, "ComplexityReport")
        .def_readonly("multiplications", &ComplexityReport::multiplications)
        .def_readonly("additions", &ComplexityReport::additions)
        .def_readonly("total_multiplications", &ComplexityReport::total_multiplications)
        .def_readonly("total_additions", &ComplexityReport::total_additions);
    m.def(
        "complexity_report",
        [](const CoprimeConfig& config, const std::string& scheme) {
            return complexity_report(config, scheme_from(scheme));
        },
        py::arg("config"), py::arg("scheme"));

    py::class_<SignalComponent>(m, "SignalComponent")
        .def(py::init([](double amplitude, double frequency, std::uint64_t phase_seed) {
                 return SignalComponent{amplitude, frequency, phase_seed};
             }),
             py::arg("amplitude"), py::arg("frequency"), py::arg("phase_seed") = 0)
        .def_readonly("amplitude", &SignalComponent::amplitude)
        .def_readonly("frequency", &SignalComponent::frequency);
    py::class_<SignalSpec>(m, "SignalSpec")
        .def(py::init([](std::vector<SignalComponent> components, double noise_sigma) {
                 SignalSpec s;
                 s.components = std::move(components);
                 s.noise_sigma = noise_sigma;
                 return s;
             }),
             py::arg("components"), py::arg("noise_sigma") = 0.0)
        .def_readonly("components", &SignalSpec::components)
        .def_readonly("noise_sigma", &SignalSpec::noise_sigma);

    py::class_<Snapshot>(m, "Snapshot")
        .def_readonly("grid", &Snapshot::grid)
        .def_readonly("x1", &Snapshot::x1)
        .def_readonly("x2", &Snapshot::x2);
    py::class_<SnapshotBatch>(m, "SnapshotBatch")
        .def_readonly("config", &SnapshotBatch::config)
        .def_readonly("snapshots", &SnapshotBatch::snapshots);
    m.def("generate_snapshots", &generate_snapshots, py::arg("spec"), py::arg("config"),
          py::arg("snapshot_count"), py::arg("seed"), py::arg("fixed_jitter") = false);

    py::class_<AutocorrEstimate>(m, "AutocorrEstimate")
        .def_readonly("lags", &AutocorrEstimate::lags)
        .def_readonly("values", &AutocorrEstimate::values)
        .def_readonly("pair_counts", &AutocorrEstimate::pair_counts)
        .def_readonly("empty_lags", &AutocorrEstimate::empty_lags);
    m.def(
        "estimate_autocorrelation",
        [](const SnapshotBatch& batch, const std::string& scheme) {
            return estimate_autocorrelation(batch, scheme_from(scheme));
        },
        py::arg("batch"), py::arg("scheme"));
    m.def("analytic_autocorrelation", &analytic_autocorrelation, py::arg("spec"), py::arg("lag"));

    py::class_<SchemeComparison>(m, "SchemeComparison")
        .def_readonly("lags", &SchemeComparison::lags)
        .def_readonly("truth", &SchemeComparison::truth)
        .def_readonly("mse_blind", &SchemeComparison::mse_blind)
        .def_readonly("mse_nonblind", &SchemeComparison::mse_nonblind)
        .def_readonly("pairs_blind", &SchemeComparison::pairs_blind)
        .def_readonly("pairs_nonblind", &SchemeComparison::pairs_nonblind)
        .def_readonly("aggregate_mse_blind", &SchemeComparison::aggregate_mse_blind)
        .def_readonly("aggregate_mse_nonblind", &SchemeComparison::aggregate_mse_nonblind)
        .def_readonly("ci_halfwidth_blind", &SchemeComparison::ci_halfwidth_blind)
        .def_readonly("ci_halfwidth_nonblind", &SchemeComparison::ci_halfwidth_nonblind);
    m.def("compare_schemes", &compare_schemes, py::arg("spec"), py::arg("config"),
          py::arg("snapshot_count"), py::arg("trials"), py::arg("seed"),
          py::arg("fixed_jitter") = false);

#ifdef COPRIME_VERSION
    m.attr("__version__") = COPRIME_VERSION;
#endif
}
