# -*- coding: utf-8 -*-


import logging
import warnings

import numpy as np

from rinorms.constants import LUXEMBURG_RTOL

log = logging.getLogger(__name__)

_MAX_STEPS = 1023
_MAX_BISECTIONS = 200

# Gauss-Legendre rule on [0, 1] used on affine pieces
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(8)
GL_NODES = 0.5 * (_GL_NODES + 1.0)
GL_WEIGHTS = 0.5 * _GL_WEIGHTS


def luxemburg_gauge(modular, scale, rtol=LUXEMBURG_RTOL):
    """
    Luxemburg gauge :math:`\\inf\\{\\lambda > 0 : m(\\lambda) \\le 1\\}`
    of several modulars at once.

    The bracket starts at ``scale`` and is doubled or halved until it
    contains the gauge, after which all rows are bisected together.

    Parameters
    ----------
    modular : callable
        ``modular(lam, rows)`` returns the modular of each row in
        ``rows`` at the corresponding positive ``lam``. It must be
        non-increasing in ``lam``.
    scale : :class:`numpy.ndarray`
        Positive scale of each row, usually its largest value.
        Rows with zero scale have gauge 0 and infinite scale
        produces an infinite gauge.
    rtol : float, optional
        Relative tolerance on the gauge.

    Returns
    -------
    :class:`numpy.ndarray`
        Gauge of each row
    """
    scale = np.atleast_1d(np.asarray(scale, dtype=np.float64))
    result = np.where(np.isinf(scale), np.inf, 0.0)
    rows = np.nonzero((scale > 0) & np.isfinite(scale))[0]

    if rows.size == 0:
        return result

    hi = scale[rows].copy()
    ok = modular(hi, rows) <= 1.0

    # Grow failing rows
    grow = ~ok
    lo = np.where(grow, hi, 0.5 * hi)
    steps = 0

    while grow.any():
        if steps == _MAX_STEPS:
            warnings.warn("Luxemburg bracket did not close, "
                          "reporting +inf for %d rows" % grow.sum())
            hi[grow] = np.inf
            break

        lo[grow] = hi[grow]
        hi[grow] *= 2.0
        grow[grow] = modular(hi[grow], rows[grow]) > 1.0
        steps += 1

    # Shrink rows that already satisfied the modular
    shrink = ok.copy()
    steps = 0

    while shrink.any() and steps < _MAX_STEPS:
        half = 0.5 * hi[shrink]
        still = modular(half, rows[shrink]) <= 1.0
        idx = np.nonzero(shrink)[0]
        hi[idx[still]] = half[still]
        lo[idx[~still]] = half[~still]
        shrink[idx[~still]] = False
        steps += 1

    if shrink.any():
        lo[shrink] = 0.0

    active = np.isfinite(hi)

    for _ in range(_MAX_BISECTIONS):
        active &= (hi - lo) > rtol * hi

        if not active.any():
            break

        idx = np.nonzero(active)[0]
        mid = 0.5 * (lo[idx] + hi[idx])
        below = modular(mid, rows[idx]) <= 1.0
        hi[idx[below]] = mid[below]
        lo[idx[~below]] = mid[~below]
    else:
        warnings.warn("Luxemburg bisection hit its iteration cap")

    log.debug("Luxemburg gauge of %d rows", rows.size)
    result[rows] = hi

    return result


def sequence_luxemburg(psi, xs, rtol=LUXEMBURG_RTOL):
    """
    Luxemburg norms :math:`\\inf\\{\\lambda : \\sum_j \\Psi(x_j/\\lambda)
    \\le 1\\}` of the rows of ``xs``

    Parameters
    ----------
    psi : callable
        Vectorised Orlicz function
    xs : :class:`numpy.ndarray`
        Non-negative values of shape :code:`(rows, n)`
    """
    xs = np.abs(np.asarray(xs, dtype=np.float64))

    if xs.ndim != 2:
        raise ValueError("xs must be two dimensional")

    if xs.shape[1] == 0:
        return np.zeros(xs.shape[0])

    def modular(lam, rows):
        return psi(xs[rows] / lam[:, None]).sum(axis=1)

    return luxemburg_gauge(modular, xs.max(axis=1), rtol=rtol)


def piece_nodes(f, a=0.0, b=None):
    """
    Gauss-Legendre nodes and weights covering the pieces of the
    :class:`~rinorms.rearrange.QuantileFunction` ``f`` on
    :math:`[a, b]`, exact for integrands of low degree in ``f``.

    Returns
    -------
    tuple
        :code:`(values, weights)` each of shape :code:`(pieces, nodes)`
    """
    start, stop, v0, v1 = f.pieces(a, b)
    length = (stop - start)[:, None]
    values = v0[:, None] + (v1 - v0)[:, None] * GL_NODES[None, :]
    # Constant pieces, infinite heads included, are evaluated exactly
    values = np.where((v0 == v1)[:, None], v0[:, None], values)
    values = np.where(np.isinf(v0)[:, None], np.inf, values)

    return values, length * GL_WEIGHTS[None, :]


def function_luxemburg(phi, f, a=0.0, b=None, rtol=LUXEMBURG_RTOL):
    """
    Luxemburg norm :math:`\\inf\\{\\lambda : \\int_a^b \\Phi(f/\\lambda)
    \\le 1\\}` of a non-increasing function ``f``
    """
    values, weights = piece_nodes(f, a, b)

    if values.size == 0:
        return 0.0

    if np.isinf(values).any():
        return np.inf

    def modular(lam, rows):
        return np.array([np.sum(weights * phi(values / lm)) for lm in lam])

    return float(luxemburg_gauge(modular, values.max(), rtol=rtol)[0])
