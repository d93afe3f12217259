# -*- coding: utf-8 -*-


import numpy as np

from rinorms.util.numba import kernel


@kernel
def sorted_magnitudes(x):
    """ Row-wise magnitudes of ``x`` sorted in descending order """
    if len(x.shape) != 2:
        raise ValueError("sorted_magnitudes only supports 2D arrays")

    out = np.empty(x.shape, dtype=np.float64)

    for r in range(x.shape[0]):
        row = np.sort(np.abs(x[r]))
        n = row.shape[0]

        for c in range(n):
            out[r, c] = row[n - 1 - c]

    return out


@kernel
def top_m_sums(xs, m):
    """ Sums of the first ``m`` columns of descending rows ``xs`` """
    k = min(m, xs.shape[1])
    out = np.zeros(xs.shape[0], dtype=np.float64)

    for r in range(xs.shape[0]):
        s = 0.0

        for c in range(k):
            s += xs[r, c]

        out[r] = s

    return out


@kernel
def abel_sums(xs, ys):
    """
    Direct and Abel-summed inner products of descending
    vectors ``xs`` and ``ys``
    """
    n = xs.shape[0]
    direct = 0.0
    abel = 0.0
    partial = 0.0

    for i in range(n):
        direct += xs[i] * ys[i]

    for i in range(n):
        partial += xs[i]
        following = ys[i + 1] if i + 1 < n else 0.0
        abel += (ys[i] - following) * partial

    return direct, abel


@kernel
def prefix_maxima(values):
    """ Row-wise running maxima along the columns """
    out = np.empty(values.shape, dtype=np.float64)

    for r in range(values.shape[0]):
        running = 0.0

        for c in range(values.shape[1]):
            if values[r, c] > running:
                running = values[r, c]

            out[r, c] = running

    return out


@kernel
def exceedance_counts(values, thresholds):
    """ Number of ``values`` strictly above each threshold """
    out = np.zeros(thresholds.shape[0], dtype=np.int64)

    for t in range(thresholds.shape[0]):
        c = 0

        for v in range(values.shape[0]):
            if values[v] > thresholds[t]:
                c += 1

        out[t] = c

    return out
