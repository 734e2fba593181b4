"""Global and local risk-adjusted performance measures.

Global baselines over the increment series r(k):

* Sharpe ratio  A * mean(r) / std(r), with population standard
  deviation and a caller-supplied annualization factor A
  (presets: sqrt(252) daily, sqrt(12) monthly),
* risk-adjusted return  mean(r) - beta * std(r), beta >= 0 being the
  trader's risk aversion.

Local counterparts per box, on top of a decomposition grid:

* LSR, the local Sharpe ratio      r_loc / sigma_loc,
* LRA, the local risk-adjusted     r_loc - beta * phi_h * sigma_loc,

where phi_h = mean(r_loc) / mean(sigma_loc) over the boxes at horizon h
rescales risk into return units per horizon.  The numerator keeps its
sign, so phi_h may be negative.

The Sharpe ratio is numerically unstable for small volatility; this
module refuses to reproduce that instability.  Global ratios raise
``ZeroVolatility``/``ZeroMeanRisk`` below a floor of 1e-12 times the
series value range, and LSR cells at degenerate risk are flagged rather
than infinite, so one flat box cannot poison a whole field.  Downstream
convolutions skip flagged cells and renormalize.

All operations are pure; fields are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .decompose import LocalFit, LRDGrid
from .errors import ValidationError, ZeroFieldSpread, ZeroMeanRisk, ZeroVolatility
from .series import PnLSeries, increments

DAILY = math.sqrt(252.0)
MONTHLY = math.sqrt(12.0)

_MEASURE_NAMES = ("return", "risk", "lsr", "lra")


@dataclass(frozen=True)
class MeasureKind:
    """Which per-box scalar to extract: return, risk, lsr, or lra.

    ``beta`` and ``normalize`` only apply to lra.  Normalization divides
    the whole field by one global standard deviation over all
    time/scale cells; it is cosmetic (contour scaling) and off by
    default.
    """

    name: str
    beta: float = 0.0
    normalize: bool = False

    def __post_init__(self):
        if self.name not in _MEASURE_NAMES:
            raise ValidationError(f"unknown measure {self.name!r}")
        if not math.isfinite(self.beta) or self.beta < 0:
            raise ValidationError(f"beta must be finite and >= 0, got {self.beta}")


LOCAL_RETURN = MeasureKind("return")
LOCAL_RISK = MeasureKind("risk")
LSR = MeasureKind("lsr")


def lra(beta: float, normalize: bool = False) -> MeasureKind:
    """Local risk-adjusted return with the given risk aversion."""
    return MeasureKind("lra", beta=float(beta), normalize=normalize)


@dataclass(frozen=True, eq=False)
class MeasureField:
    """A scalar f(t, h) per grid cell, plus degeneracy flags.

    ``values`` and ``flags`` are keyed by horizon and aligned with
    ``grid.fits``; flagged cells hold NaN and must be skipped, never
    read as zero.
    """

    grid: LRDGrid
    kind: MeasureKind
    values: Mapping[int, np.ndarray]
    flags: Mapping[int, np.ndarray]

    @property
    def horizons(self) -> tuple[int, ...]:
        return self.grid.horizons

    def degenerate_cells(self) -> int:
        return int(sum(f.sum() for f in self.flags.values()))


def risk_floor(grid_or_range) -> float:
    """Degeneracy floor: 1e-12 times the value range (or 1 if flat)."""
    rng = grid_or_range.value_range if hasattr(grid_or_range, "value_range") else grid_or_range
    return 1e-12 * (rng if rng > 0 else 1.0)


def global_sharpe(series: PnLSeries, annualization: float = DAILY) -> float:
    """Annualized mean-over-volatility of the increments.

    Raises:
        ZeroVolatility: increment standard deviation at or below the
            floor; the ratio would be numerically meaningless.
    """
    r = increments(series).increments
    sigma = float(r.std())
    if sigma <= risk_floor(series):
        raise ZeroVolatility(f"increment volatility {sigma:g} at or below floor")
    return annualization * float(r.mean()) / sigma


def global_rar(series: PnLSeries, beta: float) -> float:
    """Risk-adjusted return mean(r) - beta * std(r); no singularities."""
    r = increments(series).increments
    return float(r.mean()) - beta * float(r.std())


def phi_h(grid: LRDGrid, h: int) -> float:
    """Per-horizon scaling factor: mean local return over mean local risk.

    Signed: a horizon that loses money on average has negative phi_h.

    Raises:
        ZeroMeanRisk: mean local risk at or below the floor (e.g. an
            exactly linear series).
    """
    row = grid.row(h)
    mean_risk = float(row.local_risk.mean())
    if mean_risk <= risk_floor(grid):
        raise ZeroMeanRisk(f"mean local risk {mean_risk:g} at horizon {h} at or below floor")
    return float(row.local_return.mean()) / mean_risk


def local_sharpe(fit: LocalFit, floor: float = 0.0) -> float | None:
    """Per-box return/risk ratio, or None when risk is at or below floor.

    Returning None instead of raising keeps one flat box from killing a
    whole field; field construction records the flag.
    """
    if fit.local_risk <= floor:
        return None
    return fit.local_return / fit.local_risk


def local_rar(fit: LocalFit, beta: float, phi: float) -> float:
    """Per-box risk-adjusted return r_loc - beta * phi * sigma_loc."""
    if not math.isfinite(phi):
        raise ValidationError(f"phi must be finite, got {phi}")
    return fit.local_return - beta * phi * fit.local_risk


def measure_field(grid: LRDGrid, kind: MeasureKind) -> MeasureField:
    """Evaluate a measure on every cell of the grid.

    LSR cells with risk at or below the floor are flagged degenerate
    (value NaN).  For normalized LRA the one global divisor is the
    population standard deviation over all cells of the grid.

    Raises:
        ZeroMeanRisk: for lra kinds, propagated from phi_h.
        ZeroFieldSpread: normalized lra on a zero-spread field.
    """
    floor = risk_floor(grid)
    values: dict[int, np.ndarray] = {}
    flags: dict[int, np.ndarray] = {}
    for h in grid.horizons:
        row = grid.row(h)
        flag = np.zeros(row.count, dtype=bool)
        if kind.name == "return":
            vals = row.local_return.copy()
        elif kind.name == "risk":
            vals = row.local_risk.copy()
        elif kind.name == "lsr":
            flag = row.local_risk <= floor
            vals = np.full(row.count, np.nan)
            np.divide(row.local_return, row.local_risk, out=vals, where=~flag)
        else:
            vals = row.local_return - kind.beta * phi_h(grid, h) * row.local_risk
        values[h] = vals
        flags[h] = flag

    if kind.name == "lra" and kind.normalize:
        cells = np.concatenate([values[h] for h in grid.horizons])
        spread = float(cells.std())
        if spread <= 1e-12 * max(abs(cells).max(), 1.0):
            raise ZeroFieldSpread("lra field has no spread to normalize by")
        values = {h: v / spread for h, v in values.items()}

    for h in grid.horizons:
        values[h].flags.writeable = False
        flags[h].flags.writeable = False
    return MeasureField(
        grid=grid,
        kind=kind,
        values=MappingProxyType(values),
        flags=MappingProxyType(flags),
    )
