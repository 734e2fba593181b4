import math

import numpy as np
import pytest

from helpers import moments_oracle, rel_close
from lrd import (
    LOCAL_RETURN,
    LOCAL_RISK,
    LSR,
    MeasureKind,
    ValidationError,
    ZeroFieldSpread,
    ZeroMeanRisk,
    ZeroVolatility,
    decompose,
    fit_box,
    global_rar,
    global_sharpe,
    local_rar,
    local_sharpe,
    lra,
    measure_field,
    partition,
    phi_h,
    validate,
)


def series_from_increments(incs):
    return validate(np.concatenate([[0.0], np.cumsum(incs)]))


def noisy_grid(seed=0, n=400, horizons=(10, 25, 50)):
    rng = np.random.default_rng(seed)
    s = validate((0.05 * np.arange(n) + rng.normal(size=n)).cumsum())
    return decompose(s, horizons)


# -- global measures ------------------------------------------------------------

def test_sharpe_zero_mean():
    s = series_from_increments([1.0, -1.0, 1.0, -1.0])
    assert global_sharpe(s, annualization=1.0) == 0.0


def test_sharpe_zero_volatility():
    with pytest.raises(ZeroVolatility):
        global_sharpe(series_from_increments([1.0] * 10))


def test_sharpe_hand_value():
    s = series_from_increments([1.0, 2.0, 3.0])
    assert global_sharpe(s, annualization=1.0) == pytest.approx(
        2.0 / math.sqrt(2.0 / 3.0), rel=1e-12
    )


def test_sharpe_against_moment_oracle():
    rng = np.random.default_rng(23)
    for _ in range(100):
        incs = rng.normal(loc=rng.uniform(-1, 1), size=rng.integers(2, 200))
        s = series_from_increments(incs)
        mean, sigma = moments_oracle(incs)
        assert rel_close(global_sharpe(s, annualization=1.0), mean / sigma)


def test_rar_examples():
    s = series_from_increments([1.0, 2.0, 3.0])
    assert global_rar(s, 0.0) == pytest.approx(2.0, rel=1e-12)
    assert global_rar(s, 1.0) == pytest.approx(2.0 - math.sqrt(2.0 / 3.0), rel=1e-12)
    const = series_from_increments([0.4] * 6)
    assert global_rar(const, 3.0) == pytest.approx(0.4, rel=1e-12)


# -- phi_h ----------------------------------------------------------------------

def test_phi_h_identical_boxes():
    s = validate([0.0, 1.0] * 4)
    grid = decompose(s, [4])
    fit = grid.fits[4][0]
    assert phi_h(grid, 4) == pytest.approx(fit.local_return / fit.local_risk, rel=1e-12)


def test_phi_h_antisymmetric_returns():
    # second box is the first one mirrored: local returns cancel
    s = validate([0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0])
    grid = decompose(s, [4])
    assert phi_h(grid, 4) == pytest.approx(0.0, abs=1e-12)


def test_phi_h_zero_mean_risk():
    grid = decompose(validate(np.arange(40.0)), [4])
    with pytest.raises(ZeroMeanRisk):
        phi_h(grid, 4)


def test_phi_h_signed():
    grid = decompose(validate(-1.0 * noisy_grid(seed=2).source.values), [10])
    assert phi_h(grid, 10) < 0


# -- local measures ---------------------------------------------------------------

def test_local_sharpe_hand_value():
    s = validate([0.0, 1.0, 0.0, 1.0])
    fit = fit_box(s, partition(s, 4)[0])
    assert local_sharpe(fit) == pytest.approx(0.6 / math.sqrt(0.2), rel=1e-12)


def test_local_sharpe_degenerate_is_none():
    s = validate(np.arange(4.0))
    fit = fit_box(s, partition(s, 4)[0])
    assert local_sharpe(fit, floor=1e-12 * 3.0) is None


def unit_fit(local_return, local_risk):
    from lrd import Box, LocalFit

    box = Box(horizon=4, index=0, start=0, end=4)
    slope = local_return / 3.0
    return LocalFit(box=box, slope=slope, intercept=0.0,
                    local_return=local_return, local_risk=local_risk, center_t=1.5)


def test_local_rar_arithmetic():
    s = validate([0.0, 1.0, 0.0, 1.0])
    fit = fit_box(s, partition(s, 4)[0])
    assert local_rar(fit, 0.0, 123.0) == pytest.approx(fit.local_return, rel=1e-12)
    assert local_rar(fit, 1.0, fit.local_return / fit.local_risk) == pytest.approx(0.0, abs=1e-12)
    # identities at round numbers
    assert local_rar(unit_fit(2.0, 4.0), 1.0, 0.5) == pytest.approx(0.0, abs=1e-15)
    assert local_rar(unit_fit(1.0, 1.0), 0.75, 1.0) == pytest.approx(0.25, rel=1e-12)
    with pytest.raises(ValidationError):
        local_rar(fit, 1.0, float("inf"))


def test_measure_kind_validation():
    with pytest.raises(ValidationError):
        MeasureKind("volatility")
    with pytest.raises(ValidationError):
        lra(-0.5)
    with pytest.raises(ValidationError):
        lra(float("nan"))


# -- fields -----------------------------------------------------------------------

def test_risk_field_zero_on_ramp():
    grid = decompose(validate(np.arange(100.0)), [10])
    fld = measure_field(grid, LOCAL_RISK)
    assert max(abs(v) for v in fld.values[10]) <= 1e-12
    assert not fld.flags[10].any()


def test_lsr_field_flags_linear_series():
    grid = decompose(validate(np.arange(100.0)), [10, 25])
    fld = measure_field(grid, LSR)
    for h in fld.horizons:
        assert fld.flags[h].all()
        assert np.isnan(fld.values[h]).all()
    assert fld.degenerate_cells() == 14


def test_lra_beta_zero_equals_return_field():
    grid = noisy_grid(seed=4)
    ret = measure_field(grid, LOCAL_RETURN)
    zero_beta = measure_field(grid, lra(0.0))
    for h in grid.horizons:
        assert np.array_equal(ret.values[h], zero_beta.values[h])


def test_normalized_lra_unit_spread():
    grid = noisy_grid(seed=5)
    fld = measure_field(grid, lra(0.75, normalize=True))
    cells = np.concatenate([fld.values[h] for h in fld.horizons])
    assert cells.std() == pytest.approx(1.0, rel=1e-9)


def test_lra_normalize_zero_spread():
    # two identical boxes at one horizon: every lra cell equal
    s = validate([0.0, 1.0] * 4)
    grid = decompose(s, [4])
    with pytest.raises(ZeroFieldSpread):
        measure_field(grid, lra(0.75, normalize=True))


def test_lsr_field_scale_invariant():
    rng = np.random.default_rng(31)
    base = (0.02 * np.arange(300) + rng.normal(size=300)).cumsum()
    f0 = measure_field(decompose(validate(base), [12, 30]), LSR)
    for a in (0.001, 3.0, 2.5e4):
        f1 = measure_field(decompose(validate(a * base), [12, 30]), LSR)
        for h in f0.horizons:
            span = float(np.nanmax(np.abs(f0.values[h])))
            assert np.array_equal(f0.flags[h], f1.flags[h])
            assert np.allclose(f0.values[h], f1.values[h],
                               rtol=1e-9, atol=1e-12 * span, equal_nan=True)


def test_unnormalized_lra_scale_equivariant():
    rng = np.random.default_rng(37)
    base = (0.05 * np.arange(240) + rng.normal(size=240)).cumsum()
    kind = lra(0.6)
    f0 = measure_field(decompose(validate(base), [8, 24]), kind)
    a = 42.0
    f1 = measure_field(decompose(validate(a * base), [8, 24]), kind)
    for h in f0.horizons:
        assert np.allclose(f1.values[h], a * f0.values[h], rtol=1e-9)


def test_normalized_lra_scale_invariant():
    rng = np.random.default_rng(41)
    base = (0.05 * np.arange(240) + rng.normal(size=240)).cumsum()
    kind = lra(0.6, normalize=True)
    f0 = measure_field(decompose(validate(base), [8, 24]), kind)
    f1 = measure_field(decompose(validate(1.7e3 * base), [8, 24]), kind)
    for h in f0.horizons:
        assert np.allclose(f1.values[h], f0.values[h], rtol=1e-9)


def test_field_shape_matches_grid():
    grid = noisy_grid(seed=6)
    fld = measure_field(grid, LSR)
    for h in grid.horizons:
        assert len(fld.values[h]) == grid.row(h).count == len(fld.flags[h])
        finite = np.isfinite(fld.values[h])
        assert np.array_equal(finite, ~fld.flags[h])
