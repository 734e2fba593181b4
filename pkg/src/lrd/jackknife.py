"""Delete-one jackknife standard errors.

Generic over the resampling unit: the estimator receives a subset of
the units and returns a scalar.  For the mean estimator the jackknife
error reduces to the classical standard error s/sqrt(m).

Replicates are independent; the estimator must be a pure function of
its unit subset.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import EstimatorFailure, TooFewUnits

FRAGILE_UNITS = 4


@dataclass(frozen=True)
class JackknifeEstimate:
    """Full-sample estimate with its delete-one standard error."""

    value: float
    error: float
    m: int


def jackknife(units: Sequence, estimator: Callable[[Sequence], float]) -> JackknifeEstimate:
    """Delete-one resampling: error = sqrt((m-1)/m * sum((theta_j - mean)^2)).

    Raises:
        TooFewUnits: fewer than two units.
        EstimatorFailure: a leave-one-out replicate raised; the deleted
            unit's index is reported.
    """
    units = list(units)
    m = len(units)
    if m < 2:
        raise TooFewUnits(f"jackknife needs >= 2 units, got {m}")
    if m < FRAGILE_UNITS:
        warnings.warn(
            f"jackknife with only {m} resampling units is fragile",
            RuntimeWarning,
            stacklevel=2,
        )
    value = float(estimator(units))
    replicates = []
    for j in range(m):
        subset = units[:j] + units[j + 1:]
        try:
            replicates.append(float(estimator(subset)))
        except Exception as exc:
            raise EstimatorFailure(j, exc) from exc
    if min(replicates) == max(replicates):
        return JackknifeEstimate(value=value, error=0.0, m=m)
    mean = sum(replicates) / m
    ss = sum((theta - mean) ** 2 for theta in replicates)
    return JackknifeEstimate(value=value, error=math.sqrt(ss * (m - 1) / m), m=m)
