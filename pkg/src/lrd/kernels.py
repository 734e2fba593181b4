"""Kernel convolutions collapsing a measure field into scalar indicators.

Two stages, both nonnegative-weighted averages in ratio form (so any
constant kernel amplitude cancels):

* eta(tau, h): time-kernel-weighted average of the field row at one
  horizon, evaluated at box centers,
* phi(tau, rho): scale-kernel-weighted average of the per-horizon eta
  values over the grid's discrete horizon set, unit weight per
  configured horizon.

Kernel shapes: ``uniform`` (1 everywhere), ``gaussian``
(exp(-u^2/2), unnormalized), ``heaviside`` (1 for |u| <= 1, hard
look-back cutoff), with u = (position - center) / dilatation.

Degenerate (flagged) cells are excluded from numerator and denominator
alike, so one flat box cannot drag an average toward zero.  Errors are
delete-one jackknife: over boxes for eta, over time slices aligned with
the finest horizon's boxes for phi (each slice deletes the overlapping
box at every horizon simultaneously).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .decompose import LRDGrid
from .errors import ValidationError, ZeroKernelMass
from .jackknife import JackknifeEstimate, jackknife
from .measures import MeasureField, MeasureKind

KERNEL_SHAPES = ("uniform", "gaussian", "heaviside")


@dataclass(frozen=True)
class Kernel:
    """A weighting function with a center and a dilatation (bandwidth)."""

    shape: str
    center: float
    dilatation: float

    def __post_init__(self):
        if self.shape not in KERNEL_SHAPES:
            raise ValidationError(f"unknown kernel shape {self.shape!r}")
        if not math.isfinite(self.center):
            raise ValidationError("kernel center must be finite")
        if not (math.isfinite(self.dilatation) and self.dilatation > 0):
            raise ValidationError(f"dilatation must be positive, got {self.dilatation}")


@dataclass(frozen=True)
class IndicatorResult:
    """A scalar indicator with its jackknife error and full provenance."""

    value: float
    jackknife_error: float
    measure: MeasureKind
    rho: float
    tau: float
    delta_t: float
    delta_s: float
    kernel_shapes: tuple[str, str]
    degenerate_cells_skipped: int
    resampling_units: int


def kernel_weight(kernel: Kernel, position: float) -> float:
    """Weight at one position; nonnegative and finite for any input."""
    u = (position - kernel.center) / kernel.dilatation
    if kernel.shape == "uniform":
        return 1.0
    if kernel.shape == "gaussian":
        return math.exp(-0.5 * u * u)
    return 1.0 if abs(u) <= 1.0 else 0.0


def _weights(kernel: Kernel, positions: np.ndarray) -> np.ndarray:
    u = (positions - kernel.center) / kernel.dilatation
    if kernel.shape == "uniform":
        return np.ones_like(u)
    if kernel.shape == "gaussian":
        return np.exp(-0.5 * u * u)
    return (np.abs(u) <= 1.0).astype(float)


def _row_ratio(field: MeasureField, h: int, time_kernel: Kernel, keep=None) -> float:
    """Weighted average of one row over usable (unflagged, kept) cells."""
    row = field.grid.row(h)
    usable = ~field.flags[h]
    if keep is not None:
        usable = usable & keep
    if not usable.any():
        raise ZeroKernelMass(f"no usable cells at horizon {h}")
    w = _weights(time_kernel, row.center_t[usable])
    mass = float(w.sum())
    if mass <= 0.0:
        raise ZeroKernelMass(f"zero time-kernel mass at horizon {h}")
    return float(np.dot(w, field.values[h][usable]) / mass)


def eta(field: MeasureField, h: int, time_kernel: Kernel) -> float:
    """Average performance at one horizon, weighted along time.

    Raises:
        ZeroKernelMass: all cells at h flagged, or all weights zero.
    """
    if h not in field.grid.rows:
        raise ValidationError(f"horizon {h} not in field {field.horizons}")
    return _row_ratio(field, h, time_kernel)


def eta_estimate(field: MeasureField, h: int, time_kernel: Kernel) -> JackknifeEstimate:
    """eta with a delete-one-box jackknife error.

    Resampling units are the unflagged boxes at the horizon.
    """
    if h not in field.grid.rows:
        raise ValidationError(f"horizon {h} not in field {field.horizons}")
    usable = np.flatnonzero(~field.flags[h])
    count = field.grid.row(h).count

    def estimator(kept_units):
        keep = np.zeros(count, dtype=bool)
        keep[list(kept_units)] = True
        return _row_ratio(field, h, time_kernel, keep=keep)

    return jackknife(list(usable), estimator)


def _phi_value(field, scale_kernel, time_kernel, keep=None, warn=True) -> float:
    num = 0.0
    den = 0.0
    for h in field.horizons:
        ws = kernel_weight(scale_kernel, float(h))
        if ws == 0.0:
            continue
        try:
            eta_h = _row_ratio(field, h, time_kernel, keep=None if keep is None else keep[h])
        except ZeroKernelMass:
            if warn:
                warnings.warn(
                    f"horizon {h} skipped: no usable cells under the time kernel",
                    RuntimeWarning,
                    stacklevel=3,
                )
            continue
        num += ws * eta_h
        den += ws
    if den == 0.0:
        raise ZeroKernelMass("no horizon contributes scale-kernel mass")
    return num / den


def phi_value(field: MeasureField, scale_kernel: Kernel, time_kernel: Kernel) -> float:
    """The collapsed indicator value alone, without a jackknife error.

    Horizon rows with no usable cells under the time kernel are skipped
    with a warning; rows the scale kernel weights at zero are ignored.

    Raises:
        ZeroKernelMass: no horizon contributes mass.
    """
    return _phi_value(field, scale_kernel, time_kernel, warn=True)


def phi_indicator(field: MeasureField, scale_kernel: Kernel, time_kernel: Kernel) -> IndicatorResult:
    """Collapse eta across horizons into one scalar, with jackknife error.

    The resampling unit is a time slice: the j-th box range at the
    finest horizon, deleted simultaneously from every horizon row it
    overlaps.  Horizon rows that lose all usable cells in a replicate
    are skipped the same way the full estimate skips them.

    Raises:
        ZeroKernelMass: no horizon contributes mass.
    """
    grid: LRDGrid = field.grid
    value = _phi_value(field, scale_kernel, time_kernel, warn=True)

    h_min = grid.horizons[0]
    row_min = grid.row(h_min)
    m = row_min.count
    starts = {h: grid.row(h).offset + np.arange(grid.row(h).count) * h for h in grid.horizons}

    def keep_masks(kept_units):
        kept = np.zeros(m, dtype=bool)
        kept[list(kept_units)] = True
        deleted = np.flatnonzero(~kept)
        masks = {}
        for h in grid.horizons:
            s = starts[h]
            keep = np.ones(len(s), dtype=bool)
            for j in deleted:
                u_start = row_min.offset + j * h_min
                keep &= ~((s < u_start + h_min) & (u_start < s + h))
            masks[h] = keep
        return masks

    def estimator(kept_units):
        return _phi_value(field, scale_kernel, time_kernel, keep=keep_masks(kept_units), warn=False)

    est = jackknife(list(range(m)), estimator)
    return IndicatorResult(
        value=value,
        jackknife_error=est.error,
        measure=field.kind,
        rho=scale_kernel.center,
        tau=time_kernel.center,
        delta_t=time_kernel.dilatation,
        delta_s=scale_kernel.dilatation,
        kernel_shapes=(time_kernel.shape, scale_kernel.shape),
        degenerate_cells_skipped=field.degenerate_cells(),
        resampling_units=m,
    )


def default_parameters(grid: LRDGrid | int, rho: float) -> tuple[float, float, float]:
    """Standard kernel placement: tau at the last sample, delta_s = 100*rho,
    delta_t = a quarter of the time span.  Override per call as needed.

    Accepts a grid or a bare sample count.
    """
    n = grid if isinstance(grid, int) else grid.n
    tau = float(n - 1)
    delta_t = tau / 4.0
    delta_s = 100.0 * float(rho)
    return tau, delta_t, delta_s
