"""Multi-period co-prime sampler analysis under sampling-time jitter."""

from ._coprime_jitter import (
    AutocorrEstimate,
    ClaimRecord,
    ComplexityReport,
    CoprimeConfig,
    DegenerateGridError,
    JitterRealization,
    LengthMismatchError,
    NotCoprimeError,
    ParseError,
    PerturbedGrid,
    Prop1Report,
    RangeError,
    Rational,
    SchemeComparison,
    SignalComponent,
    SignalSpec,
    Snapshot,
    SnapshotBatch,
    WeightTable,
    __version__,
    additional_contributors,
    analytic_autocorrelation,
    build_grid,
    check_genericity,
    compare_schemes,
    complexity_report,
    draw_jitter,
    estimate_autocorrelation,
    generate_snapshots,
    prop1_expected,
    validate_config,
    verify_proposition1,
    weight_by_enumeration,
    weight_mapped_blind,
    weight_mapped_nonblind,
    weight_unmapped,
    zero_jitter,
)

__all__ = [
    "AutocorrEstimate",
    "ClaimRecord",
    "ComplexityReport",
    "CoprimeConfig",
    "DegenerateGridError",
    "JitterRealization",
    "LengthMismatchError",
    "NotCoprimeError",
    "ParseError",
    "PerturbedGrid",
    "Prop1Report",
    "RangeError",
    "Rational",
    "SchemeComparison",
    "SignalComponent",
    "SignalSpec",
    "Snapshot",
    "SnapshotBatch",
    "WeightTable",
    "__version__",
    "additional_contributors",
    "analytic_autocorrelation",
    "build_grid",
    "check_genericity",
    "compare_schemes",
    "complexity_report",
    "draw_jitter",
    "estimate_autocorrelation",
    "generate_snapshots",
    "prop1_expected",
    "validate_config",
    "verify_proposition1",
    "weight_by_enumeration",
    "weight_mapped_blind",
    "weight_mapped_nonblind",
    "weight_unmapped",
    "zero_jitter",
]
