"""Independent oracles used to cross-check the production code paths.

These deliberately avoid the library's own arithmetic: the line fit
solves the raw normal equations with numpy.linalg instead of the
centered covariance form, and the moment oracle does a literal
two-pass mean/deviation computation.
"""

import math

import numpy as np


def ols_oracle(box_values):
    """Direct normal-equation solve for y = a + b*t, t = 0..h-1.

    Returns (slope, intercept, risk, local_return) with risk the RMS
    residual using divisor h.
    """
    y = np.asarray(box_values, dtype=np.float64)
    h = len(y)
    t = np.arange(h, dtype=np.float64)
    design = np.array([[h, t.sum()], [t.sum(), (t * t).sum()]])
    rhs = np.array([y.sum(), (t * y).sum()])
    intercept, slope = np.linalg.solve(design, rhs)
    resid = y - (intercept + slope * t)
    risk = math.sqrt(float((resid * resid).sum()) / h)
    return float(slope), float(intercept), risk, float(slope) * (h - 1)


def moments_oracle(values):
    """Two-pass mean and population standard deviation."""
    xs = [float(v) for v in values]
    n = len(xs)
    mean = sum(xs) / n
    var = sum((v - mean) ** 2 for v in xs) / n
    return mean, math.sqrt(var)


def classical_stderr_of_mean(values):
    """s / sqrt(m) with the sample (divisor m-1) standard deviation."""
    xs = [float(v) for v in values]
    m = len(xs)
    mean = sum(xs) / m
    s2 = sum((v - mean) ** 2 for v in xs) / (m - 1)
    return math.sqrt(s2 / m)


def rel_close(a, b, rel=1e-9, scale=None):
    """|a-b| within rel of magnitude, with an optional scale guard."""
    tol = rel * max(abs(a), abs(b), scale if scale is not None else 0.0)
    return abs(a - b) <= max(tol, 1e-300)
