"""Canonical data model for cumulative profit-and-loss series.

A ``PnLSeries`` holds the cumulative PnL curve x(k), k = 0..n-1, in
currency units, one sample per trading day.  Daily indexing is assumed
throughout: the optional date labels are reporting metadata only and
never participate in arithmetic (a horizon is a count of samples, not
of calendar days).  Gaps are the caller's problem; the validator
rejects non-finite entries rather than imputing.

All values are immutable after construction and safe to share across
concurrent readers.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass

import numpy as np

from .errors import LabelMismatch, NonFinite, TooShort


@dataclass(frozen=True, eq=False)
class PnLSeries:
    """Validated cumulative PnL curve.

    Attributes:
        values: float64 array of cumulative PnL, length >= 2, all finite.
        labels: optional per-sample ISO-8601 date strings, strictly
            increasing, same length as ``values``.
    """

    values: np.ndarray
    labels: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def value_range(self) -> float:
        return float(self.values.max() - self.values.min())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PnLSeries):
            return NotImplemented
        return np.array_equal(self.values, other.values) and self.labels == other.labels

    def __repr__(self) -> str:
        dated = "dated" if self.labels is not None else "undated"
        return f"PnLSeries(n={self.n}, {dated})"


@dataclass(frozen=True, eq=False)
class ReturnSeries:
    """Per-sample increments r(k) = x(k+1) - x(k) of a PnLSeries."""

    increments: np.ndarray

    def __len__(self) -> int:
        return len(self.increments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReturnSeries):
            return NotImplemented
        return np.array_equal(self.increments, other.increments)


def _check_labels(labels, n: int) -> tuple[str, ...]:
    labels = tuple(str(lab) for lab in labels)
    if len(labels) != n:
        raise LabelMismatch(f"{len(labels)} labels for {n} samples")
    for lab in labels:
        try:
            datetime.date.fromisoformat(lab)
        except ValueError:
            raise LabelMismatch(f"label {lab!r} is not an ISO-8601 date") from None
    for prev, cur in zip(labels, labels[1:]):
        if not prev < cur:
            raise LabelMismatch(f"labels not strictly increasing at {cur!r}")
    return labels


def validate(raw, labels=None) -> PnLSeries:
    """Build a ``PnLSeries`` from a raw sequence, or raise.

    Idempotent: validating an already-valid series (or its fields)
    returns an equal series.

    Raises:
        TooShort: fewer than two samples.
        NonFinite: a NaN or infinite sample; the index is reported.
        LabelMismatch: label count, order, or format is wrong.
    """
    if isinstance(raw, PnLSeries):
        if labels is None:
            labels = raw.labels
        raw = raw.values
    values = np.asarray(raw, dtype=np.float64)
    if values.ndim != 1:
        raise ValueError(f"expected a 1-d sequence, got shape {values.shape}")
    if len(values) < 2:
        raise TooShort(f"need at least 2 samples, got {len(values)}")
    finite = np.isfinite(values)
    if not finite.all():
        raise NonFinite(int(np.argmin(finite)))
    values = values.copy()
    values.flags.writeable = False
    checked = _check_labels(labels, len(values)) if labels is not None else None
    return PnLSeries(values=values, labels=checked)


def increments(series: PnLSeries) -> ReturnSeries:
    """Difference the cumulative curve: increments[k] = x(k+1) - x(k)."""
    diffs = np.diff(series.values)
    diffs.flags.writeable = False
    return ReturnSeries(increments=diffs)
