"""Box-wise detrended decomposition of a PnL series.

The series is split into non-overlapping boxes of length h, one row per
investment horizon; each box gets an ordinary least-squares line over
local coordinates t = 0..h-1.  Two numbers summarize a box:

* local risk: RMS residual around the fitted line (divisor h, no
  Bessel correction),
* local return: the fitted line's endpoint difference, slope * (h-1),
  which damps the influence of outlier endpoints.

When n is not divisible by h the remainder is dropped from the oldest
end, so the most recent samples always occupy complete boxes (time
kernels downstream are usually centered on the most recent sample).

Everything here is a pure function of its inputs; grids are immutable
and rows are assembled in index order, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Mapping

import numpy as np

from ._backend import fit_boxes
from .errors import (
    DegenerateBox,
    HorizonTooLarge,
    HorizonTooSmall,
    InsufficientBoxes,
    ValidationError,
)
from .series import PnLSeries


@dataclass(frozen=True)
class Box:
    """One window of a partition: [start, end) at a given horizon."""

    horizon: int
    index: int
    start: int
    end: int

    def __post_init__(self):
        if self.end - self.start != self.horizon:
            raise ValidationError(
                f"box [{self.start}, {self.end}) does not span horizon {self.horizon}"
            )
        if self.start < 0 or self.index < 0:
            raise ValidationError("box start and index must be nonnegative")


@dataclass(frozen=True)
class LocalFit:
    """Per-box linear-trend result.

    ``center_t`` is the box midpoint in source-sample coordinates,
    start + (h-1)/2; it is where time kernels evaluate this box.
    """

    box: Box
    slope: float
    intercept: float
    local_return: float
    local_risk: float
    center_t: float


@dataclass(frozen=True)
class FitRow:
    """All fits at one horizon, as parallel arrays ordered by box index."""

    horizon: int
    offset: int
    slope: np.ndarray
    intercept: np.ndarray
    local_return: np.ndarray
    local_risk: np.ndarray
    center_t: np.ndarray

    @property
    def count(self) -> int:
        return len(self.slope)

    def box(self, i: int) -> Box:
        start = self.offset + i * self.horizon
        return Box(horizon=self.horizon, index=i, start=start, end=start + self.horizon)

    def fit(self, i: int) -> LocalFit:
        return LocalFit(
            box=self.box(i),
            slope=float(self.slope[i]),
            intercept=float(self.intercept[i]),
            local_return=float(self.local_return[i]),
            local_risk=float(self.local_risk[i]),
            center_t=float(self.center_t[i]),
        )


@dataclass(frozen=True, eq=False)
class LRDGrid:
    """The full time x horizon field of local fits."""

    source: PnLSeries
    horizons: tuple[int, ...]
    rows: Mapping[int, FitRow]

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def value_range(self) -> float:
        return self.source.value_range

    def row(self, h: int) -> FitRow:
        try:
            return self.rows[h]
        except KeyError:
            raise KeyError(f"horizon {h} not in grid {self.horizons}") from None

    @cached_property
    def fits(self) -> Mapping[int, tuple[LocalFit, ...]]:
        """Materialized per-horizon LocalFit tuples, ordered by box index."""
        return MappingProxyType(
            {h: tuple(row.fit(i) for i in range(row.count)) for h, row in self.rows.items()}
        )


def _partition_layout(n: int, h: int) -> tuple[int, int]:
    """(offset, count) of the box layout, validating the horizon."""
    if h < 2:
        raise HorizonTooSmall(f"horizon {h} < 2")
    if h > n:
        raise HorizonTooLarge(f"horizon {h} exceeds series length {n}")
    count = n // h
    return n - count * h, count


def partition(series: PnLSeries | int, h: int) -> list[Box]:
    """Split a series into floor(n/h) non-overlapping boxes of length h.

    Box boundaries are anchored to the most recent sample; when
    n mod h != 0 the remainder is dropped from the oldest end.

    Raises:
        HorizonTooSmall: h < 2.
        HorizonTooLarge: h > n.
    """
    n = series if isinstance(series, int) else series.n
    offset, count = _partition_layout(n, int(h))
    return [
        Box(horizon=h, index=i, start=offset + i * h, end=offset + (i + 1) * h)
        for i in range(count)
    ]


def fit_box(series: PnLSeries, box: Box) -> LocalFit:
    """Least-squares line through one box.

    Raises:
        DegenerateBox: box shorter than 2 samples.
    """
    if box.horizon < 2:
        raise DegenerateBox(f"cannot fit a line through {box.horizon} sample(s)")
    if box.start < 0 or box.end > series.n:
        raise ValidationError(
            f"box [{box.start}, {box.end}) outside series of length {series.n}"
        )
    slope, intercept, risk = fit_boxes(series.values, box.start, box.horizon, 1)
    return LocalFit(
        box=box,
        slope=float(slope[0]),
        intercept=float(intercept[0]),
        local_return=float(slope[0]) * (box.horizon - 1),
        local_risk=float(risk[0]),
        center_t=box.start + 0.5 * (box.horizon - 1),
    )


def _fit_row(series: PnLSeries, h: int) -> FitRow:
    offset, count = _partition_layout(series.n, h)
    if count < 2:
        raise InsufficientBoxes(
            f"horizon {h} yields {count} box(es) on {series.n} samples; need >= 2"
        )
    slope, intercept, risk = fit_boxes(series.values, offset, h, count)
    for arr in (slope, intercept, risk):
        arr.flags.writeable = False
    local_return = slope * (h - 1)
    center_t = offset + np.arange(count) * h + 0.5 * (h - 1)
    local_return.flags.writeable = False
    center_t.flags.writeable = False
    return FitRow(
        horizon=h,
        offset=offset,
        slope=slope,
        intercept=intercept,
        local_return=local_return,
        local_risk=risk,
        center_t=center_t,
    )


def decompose(series: PnLSeries, horizons) -> LRDGrid:
    """Fit every box at every horizon.

    Horizons are deduplicated and sorted ascending.  Each horizon must
    produce at least two boxes so that box averages and leave-one-out
    resampling are defined.

    Raises:
        HorizonTooSmall, HorizonTooLarge: propagated from partition.
        InsufficientBoxes: fewer than 2 boxes at some horizon.
    """
    hs = tuple(sorted({int(h) for h in horizons}))
    if not hs:
        raise ValidationError("horizons must be non-empty")
    rows = {h: _fit_row(series, h) for h in hs}
    return LRDGrid(source=series, horizons=hs, rows=MappingProxyType(rows))
