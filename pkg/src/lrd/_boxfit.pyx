# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled box-fitting core: per-box least-squares detrending.

Mirrors ``lrd._boxfit_py.fit_boxes``; one pass for the box mean, one for
the covariance, one for the residuals.  Centering on the box mean keeps
the covariance accumulation stable for series with a large constant
offset.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def fit_boxes(values, Py_ssize_t offset, Py_ssize_t horizon, Py_ssize_t count):
    """Least-squares line per box; see the NumPy fallback for the contract."""
    x_arr = np.ascontiguousarray(values, dtype=np.float64)
    cdef const double[::1] x = x_arr
    if offset < 0 or offset + horizon * count > x.shape[0]:
        raise ValueError("box range exceeds the series bounds")
    if horizon < 2:
        raise ValueError("horizon must be at least 2")

    slope_arr = np.empty(count, dtype=np.float64)
    intercept_arr = np.empty(count, dtype=np.float64)
    risk_arr = np.empty(count, dtype=np.float64)
    cdef double[::1] slope = slope_arr
    cdef double[::1] intercept = intercept_arr
    cdef double[::1] risk = risk_arr

    cdef double h = <double> horizon
    cdef double t_mean = 0.5 * (h - 1.0)
    cdef double sxx = h * (h * h - 1.0) / 12.0
    cdef Py_ssize_t i, k, base
    cdef double mean, cov, a, b, r, ssr

    for i in range(count):
        base = offset + i * horizon
        mean = 0.0
        for k in range(horizon):
            mean += x[base + k]
        mean /= h
        cov = 0.0
        for k in range(horizon):
            cov += (<double> k - t_mean) * (x[base + k] - mean)
        b = cov / sxx
        a = mean - b * t_mean
        ssr = 0.0
        for k in range(horizon):
            r = x[base + k] - (a + b * <double> k)
            ssr += r * r
        slope[i] = b
        intercept[i] = a
        risk[i] = (ssr / h) ** 0.5

    return slope_arr, intercept_arr, risk_arr
