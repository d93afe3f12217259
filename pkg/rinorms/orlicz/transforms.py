# -*- coding: utf-8 -*-


import logging
import warnings

import numpy as np
from scipy.integrate import quad

from rinorms.constants import (DIVERGENCE_LIMIT,
                               LAMBDA_HEAD,
                               LAMBDA_RTOL,
                               LUXEMBURG_RTOL,
                               QUAD_RTOL)
from rinorms.norms.luxemburg import sequence_luxemburg
from rinorms.orlicz.functions import OrliczFunction, make_theta

log = logging.getLogger(__name__)

# Theta(x)/x is checked on this grid
_RATIO_GRID = np.geomspace(1e-3, 1e3, 1000)

# Gauss-Legendre points per quantile segment of lambda_function
_LAMBDA_NODES = 16


def _elementwise(fn, x):
    x = np.asarray(x, dtype=np.float64)
    out = np.empty(x.shape, dtype=np.float64)

    for i, xi in np.ndenumerate(x):
        out[i] = fn(abs(float(xi)))

    return out


def tilde(theta):
    """
    Convex minorant :math:`\\tilde\\Theta(x) = \\int_0^x \\Theta(t)/t\\,dt`
    of a function with :math:`\\Theta(x)/x` non-decreasing, which
    satisfies :math:`\\tilde\\Theta(x) \\le \\Theta(x) \\le
    \\tilde\\Theta(2x)`.

    Raises
    ------
    ValueError
        If :math:`\\Theta(0) \\ne 0` or :math:`\\Theta(x)/x`
        decreases on the check grid.
    """
    if theta(0.0) != 0.0:
        raise ValueError("%s does not vanish at 0" % theta.label)

    ratio = theta(_RATIO_GRID) / _RATIO_GRID

    if np.any(np.diff(ratio) < -1e-12 * np.abs(ratio[1:])):
        raise ValueError("%s(x)/x is not non-decreasing" % theta.label)

    def integrand(t):
        return float(theta(t)) / t

    def scalar(x):
        if x == 0.0:
            return 0.0

        points = [1.0] if x > 1.0 else None
        value, _ = quad(integrand, 0.0, x, points=points,
                        epsrel=QUAD_RTOL, epsabs=1e-300, limit=200)

        return value if value <= DIVERGENCE_LIMIT else np.inf

    def evaluator(x):
        return _elementwise(scalar, x)

    return OrliczFunction(evaluator, "tilde(%s)" % theta.label, True)


def _segments(xi):
    """ Geometric u-segments refined towards 0, split at quantile jumps """
    edges = np.concatenate([np.geomspace(LAMBDA_HEAD, 1.0, 81),
                            [b for b in xi.quantile_breaks()
                             if LAMBDA_HEAD < b < 1.0]])
    return np.unique(edges)


def make_lambda(theta, xi, x):
    """
    :math:`\\Lambda(x) = E\\,\\Theta(x\\xi) = \\int_0^1 \\Theta(x Q_\\xi(u))
    \\,du` by adaptive quadrature over the quantile variable.

    The integral is taken on geometric u-segments reaching
    down to :math:`u = 10^{-10}`. The remaining head is bounded below by
    monotonicity and that bound is added, so the result may fall short
    of :math:`\\Lambda(x)` by the excess of the head over the bound.

    Parameters
    ----------
    theta : :class:`OrliczFunction`
    xi : :class:`~rinorms.distributions.Distribution`
    x : float
        Non-negative argument

    Returns
    -------
    float
        :math:`\\Lambda(x)`, +inf if the partial sums diverge.
    """
    x = float(x)

    if x < 0:
        raise ValueError("x %s must be >= 0" % x)

    if x == 0.0:
        return 0.0

    def integrand(u):
        return float(theta(x * xi.quantile(u)))

    edges = _segments(xi)
    total = LAMBDA_HEAD * integrand(LAMBDA_HEAD)

    for lo, hi in zip(edges[:-1], edges[1:]):
        value, _ = quad(integrand, lo, hi, epsrel=LAMBDA_RTOL,
                        epsabs=1e-300, limit=200)
        total += value

        if not total <= DIVERGENCE_LIMIT:
            log.debug("Lambda(%g) diverges on [%g, %g]", x, lo, hi)
            return np.inf

    return total


def lambda_function(theta, xi, nodes=_LAMBDA_NODES):
    """
    :math:`\\Lambda = E\\,\\Theta(x\\xi)` as a vectorised
    :class:`OrliczFunction`, using a fixed composite Gauss-Legendre
    rule over the segments of :func:`make_lambda`.
    """
    edges = _segments(xi)
    gl, gw = np.polynomial.legendre.leggauss(nodes)
    lo, hi = edges[:-1, None], edges[1:, None]
    u = (lo + 0.5 * (hi - lo) * (gl[None, :] + 1.0)).ravel()
    w = (0.5 * (hi - lo) * gw[None, :]).ravel()

    u = np.concatenate([[LAMBDA_HEAD], u])
    w = np.concatenate([[LAMBDA_HEAD], w])
    q = xi.quantile(u)

    def evaluator(x):
        x = np.abs(x)
        values = theta(x[..., None] * q)
        return np.sum(w * values, axis=-1)

    return OrliczFunction(evaluator,
                          "lambda(%s,%r)" % (theta.label, xi),
                          False)


def lambda_norm(a, lam, rtol=LUXEMBURG_RTOL):
    """
    Luxemburg norm of the coefficients ``a`` under the
    Orlicz function ``lam``,
    :math:`\\inf\\{\\lambda : \\sum_i \\Lambda(|a_i|/\\lambda) \\le 1\\}`
    """
    a = np.abs(np.asarray(a, dtype=np.float64)).ravel()

    if a.size == 0:
        return 0.0

    return float(sequence_luxemburg(lam, a[None, :], rtol=rtol)[0])


def theta_for(M, N):
    """
    :math:`\\Theta` splice of the Orlicz functions generating
    ``M`` and ``N``.

    Raises
    ------
    ValueError
        If either norm is not an Orlicz norm.
    """
    phi, psi = M.as_orlicz(), N.as_orlicz()

    if phi is None or psi is None:
        raise ValueError("%s and %s are not both Orlicz norms" % (M, N))

    if not (phi.is_convex_claimed and psi.is_convex_claimed):
        warnings.warn("%s or %s is not convex, the splice "
                      "constants may not hold" % (phi.label, psi.label))

    return make_theta(phi, psi)
