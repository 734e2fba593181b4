import numpy as np
import pytest
from hypothesis import given, strategies as st

from lrd import (
    LabelMismatch,
    NonFinite,
    TooShort,
    increments,
    validate,
)

finite_floats = st.floats(min_value=-1e9, max_value=1e9, allow_nan=False)


def test_minimal_valid_series():
    s = validate([0.0, 1.0])
    assert s.n == 2
    assert s.labels is None


def test_too_short():
    with pytest.raises(TooShort):
        validate([1.0])
    with pytest.raises(TooShort):
        validate([])


def test_non_finite_reports_index():
    with pytest.raises(NonFinite) as exc:
        validate([0.0, float("nan"), 2.0])
    assert exc.value.index == 1
    with pytest.raises(NonFinite) as exc:
        validate([0.0, 1.0, float("inf")])
    assert exc.value.index == 2


def test_labels_accepted():
    s = validate([0.0, 1.2], labels=["2006-01-02", "2006-01-03"])
    assert s.labels == ("2006-01-02", "2006-01-03")


@pytest.mark.parametrize(
    "labels",
    [
        ["2006-01-02"],                              # wrong length
        ["2006-01-03", "2006-01-02"],                # not increasing
        ["2006-01-02", "2006-01-02"],                # not strictly increasing
        ["02/01/2006", "03/01/2006"],                # not ISO
    ],
)
def test_bad_labels(labels):
    with pytest.raises(LabelMismatch):
        validate([0.0, 1.0], labels=labels)


def test_increment_examples():
    assert list(increments(validate([0, 1, 3, 6])).increments) == [1, 2, 3]
    assert list(increments(validate([5, 5, 5])).increments) == [0, 0]
    assert list(increments(validate([0, -1, 1])).increments) == [-1, 2]


@given(st.lists(finite_floats, min_size=2, max_size=200))
def test_roundtrip_reconstruction(raw):
    s = validate(raw)
    rebuilt = s.values[0] + np.concatenate([[0.0], np.cumsum(increments(s).increments)])
    scale = max(np.abs(s.values).max(), 1.0)
    assert np.max(np.abs(rebuilt - s.values)) <= 1e-9 * scale


def test_increments_sum_matches_endpoints():
    rng = np.random.default_rng(7)
    for _ in range(50):
        vals = rng.normal(size=rng.integers(2, 300)).cumsum()
        s = validate(vals)
        total = increments(s).increments.sum()
        assert total == pytest.approx(s.values[-1] - s.values[0], rel=1e-9, abs=1e-12)


def test_validate_idempotent():
    s = validate([0.0, 2.0, 1.0], labels=["2020-01-01", "2020-01-02", "2020-01-03"])
    assert validate(s) == s
    assert validate(s.values, s.labels) == s


def test_values_immutable():
    s = validate([0.0, 1.0, 2.0])
    with pytest.raises(ValueError):
        s.values[0] = 5.0
