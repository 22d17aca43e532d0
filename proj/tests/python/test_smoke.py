"""Smoke tests for the python bindings; the full suites live in tests/ (C++)."""

import math

import pytest

import coprime_jitter as cj


@pytest.fixture(scope="module")
def cfg433():
    return cj.validate_config(4, 3, 3, "1/8", 4096)


def test_validate_config_errors():
    with pytest.raises(ValueError):
        cj.validate_config(4, 2, 1, "1/8", 4096)  # not co-prime
    with pytest.raises(ValueError):
        cj.validate_config(4, 3, 1, "1/4", 4096)  # rho out of range


def test_rational_roundtrip():
    r = cj.Rational("3/12")
    assert (r.num, r.den) == (1, 4)
    assert str(r) == "1/4"
    assert float(r) == 0.25


def test_grid_shapes(cfg433):
    jitter = cj.draw_jitter(cfg433, 7)
    assert len(jitter.eps1) == 9
    assert len(jitter.eps2) == 12
    grid = cj.build_grid(cfg433, jitter)
    assert len(grid.t1) == 9
    assert len(grid.t2) == 12
    assert float(grid.t1[0]) == pytest.approx(0.0, abs=0.125)


def test_proposition1_on_a_generic_seed(cfg433):
    seed = 1
    while True:
        jitter = cj.draw_jitter(cfg433, seed)
        if not cj.check_genericity(jitter, cfg433, "necessary"):
            break
        seed += 1
    report = cj.verify_proposition1(cfg433, jitter)
    assert report.all_hold()
    claims = report.claims
    assert [c.id for c in claims] == list(range(1, 9))
    assert claims[0].expected == 37
    assert claims[7].expected == 421
    assert all(c.observed == c.expected for c in claims)


def test_weight_anchors(cfg433):
    table = cj.weight_mapped_nonblind(cfg433)
    assert table.count_at(0) == 24
    assert table.count_at(12) == 18
    assert table.count_at(4) == 13
    assert table.count_at(1) == 6
    assert not table.formula_gaps
    blind = cj.weight_mapped_blind(cfg433)
    assert blind.count_at(0) == 18
    assert cj.additional_contributors(cfg433) == 60


def test_enumeration_matches_closed_form(cfg433):
    grid = cj.build_grid(cfg433, cj.draw_jitter(cfg433, 5))
    enumerated = cj.weight_by_enumeration(grid, "nonblind")
    closed = cj.weight_mapped_nonblind(cfg433)
    for lag in range(-35, 36):
        assert enumerated.count_at(lag) == closed.count_at(lag)


def test_complexity_delta(cfg433):
    blind = cj.complexity_report(cfg433, "blind")
    nonblind = cj.complexity_report(cfg433, "nonblind")
    assert nonblind.total_multiplications - blind.total_multiplications == 60
    assert nonblind.total_additions - blind.total_additions == 60


def test_constant_signal_estimate(cfg433):
    spec = cj.SignalSpec([cj.SignalComponent(2.5, 0.0)], noise_sigma=0.0)
    batch = cj.generate_snapshots(spec, cfg433, 3, 11)
    est = cj.estimate_autocorrelation(batch, "nonblind")
    for value, pairs in zip(est.values, est.pair_counts):
        if pairs:
            assert value == pytest.approx(6.25, rel=1e-12)


def test_compare_schemes_runs(cfg433):
    spec = cj.SignalSpec([cj.SignalComponent(1.0, 0.37)], noise_sigma=0.1)
    cmp = cj.compare_schemes(spec, cfg433, 20, 4, 99)
    assert cmp.pairs_nonblind[0] - cmp.pairs_blind[0] == 6  # 2r
    assert math.isfinite(cmp.aggregate_mse_blind)
    assert math.isfinite(cmp.aggregate_mse_nonblind)
