import math

import numpy as np
import pytest

from lrd import (
    DAILY,
    SpecInvalid,
    SynthSpec,
    blue_green_pair,
    calibrate,
    decompose,
    generate,
    global_sharpe,
    increments,
)


def test_noiseless_single_segment_is_exact_line():
    spec = SynthSpec(n=50, segments=((49, 0.25),), noise_amplitude=0.0, seed=1)
    s = generate(spec)
    assert np.allclose(s.values, 0.25 * np.arange(50), atol=1e-12)
    grid = decompose(s, [5, 10, 25])
    for h in grid.horizons:
        assert grid.row(h).local_risk.max() <= 1e-9 * s.value_range


def test_noiseless_segments_change_slope():
    spec = SynthSpec(n=11, segments=((5, 1.0), (5, -1.0)), noise_amplitude=0.0, seed=0)
    s = generate(spec)
    assert s.values[5] == pytest.approx(5.0)
    assert s.values[10] == pytest.approx(0.0)


def test_same_seed_bit_identical():
    spec = SynthSpec(n=300, segments=((299, 0.1),), noise_amplitude=2.0, seed=99)
    assert np.array_equal(generate(spec).values, generate(spec).values)


def test_different_seed_differs():
    a = SynthSpec(n=300, segments=((299, 0.1),), noise_amplitude=2.0, seed=1)
    b = SynthSpec(n=300, segments=((299, 0.1),), noise_amplitude=2.0, seed=2)
    assert not np.array_equal(generate(a).values, generate(b).values)


def test_spec_validation():
    with pytest.raises(SpecInvalid):
        SynthSpec(n=10, segments=((5, 0.1),), noise_amplitude=1.0, seed=0)
    with pytest.raises(SpecInvalid):
        SynthSpec(n=10, segments=((9, 0.1),), noise_amplitude=-1.0, seed=0)
    with pytest.raises(SpecInvalid):
        SynthSpec(n=1, segments=((0, 0.0),), noise_amplitude=1.0, seed=0)


def test_calibrate_closed_form():
    assert calibrate(0.0, 3.0, 100) == 0.0
    assert calibrate(2.0, 0.5, 100, annualization=4.0) == pytest.approx(0.25, rel=1e-12)
    assert calibrate(0.7, 1.0, 2000) == pytest.approx(0.04410, abs=5e-6)
    with pytest.raises(SpecInvalid):
        calibrate(0.7, 0.0, 100)


def test_calibrated_sharpe_expectation():
    # over many seeds the realized annualized Sharpe centers on the target
    target, noise, n, seeds = 0.7, 1.0, 2000, 1000
    drift = calibrate(target, noise, n)
    realized = np.empty(seeds)
    for seed in range(seeds):
        spec = SynthSpec(n=n, segments=((n - 1, drift),), noise_amplitude=noise, seed=seed)
        realized[seed] = global_sharpe(generate(spec))
    stderr = realized.std(ddof=1) / math.sqrt(seeds)
    assert abs(realized.mean() - target) <= 3 * stderr


def test_blue_green_pair_structure():
    blue, green = blue_green_pair(seed=7)
    assert blue.n == green.n == 2000
    assert blue.noise_amplitude == pytest.approx(1.5 * green.noise_amplitude)
    assert blue.seed == green.seed == 7
    # blue: three quarters active, final quarter flat
    (active_len, active_drift), (weak_len, weak_drift) = blue.segments
    assert active_len + weak_len == 1999
    assert weak_len == round(0.25 * 1999)
    assert weak_drift == 0.0
    assert active_drift > 0
    # whole-series mean increment hits the blue Sharpe target
    mean_inc = active_drift * active_len / 1999
    assert mean_inc == pytest.approx(0.8 * blue.noise_amplitude / DAILY, rel=1e-12)
    ((g_len, g_drift),) = green.segments
    assert g_len == 1999
    assert g_drift == pytest.approx(0.6 * green.noise_amplitude / DAILY, rel=1e-12)


def test_blue_green_common_noise():
    # shared draw vector: increments differ only by drift and amplitude
    blue, green = blue_green_pair(seed=11)
    bi = increments(generate(blue)).increments
    gi = increments(generate(green)).increments
    drift = np.concatenate([np.full(length, d) for length, d in blue.segments])
    g_drift = np.full(1999, green.segments[0][1])
    z_blue = (bi - drift) / blue.noise_amplitude
    z_green = (gi - g_drift) / green.noise_amplitude
    assert np.allclose(z_blue, z_green, atol=1e-12)
