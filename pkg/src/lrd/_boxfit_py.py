"""Vectorized NumPy fallback for the box-fitting hot loop.

Same contract as the compiled ``lrd._boxfit`` module; see
``lrd._backend`` for how one of the two is selected at import time.
"""

import numpy as np


def fit_boxes(values, offset, horizon, count):
    """Least-squares line per box, over local coordinates t = 0..h-1.

    Fits ``count`` contiguous boxes of length ``horizon`` starting at
    ``values[offset]``.  The box mean is subtracted before the covariance
    accumulation so a constant offset in the data cannot cancel
    catastrophically.

    Returns:
        (slope, intercept, risk) float64 arrays of length ``count``;
        ``risk`` is the RMS residual with divisor h (population form).
    """
    h = int(horizon)
    m = int(count)
    x = np.asarray(values, dtype=np.float64)[offset:offset + m * h].reshape(m, h)
    t = np.arange(h, dtype=np.float64)
    t_mean = 0.5 * (h - 1)
    tc = t - t_mean
    sxx = float(np.dot(tc, tc))
    x_mean = x.mean(axis=1)
    slope = (x - x_mean[:, None]) @ tc / sxx
    intercept = x_mean - slope * t_mean
    resid = x - (intercept[:, None] + slope[:, None] * t)
    risk = np.sqrt((resid * resid).mean(axis=1))
    return slope, intercept, risk
