# -*- coding: utf-8 -*-


import logging
import warnings

import numpy as np

from rinorms.constants import LUXEMBURG_RTOL
from rinorms.norms.luxemburg import (GL_NODES,
                                     GL_WEIGHTS,
                                     function_luxemburg)
from rinorms.norms.specs import Lp, Lorentz, Orlicz, RiNormSpec
from rinorms.rearrange import QuantileFunction

log = logging.getLogger(__name__)

# Relative drop below which an affine power integral uses quadrature
_CANCELLATION = 1e-3


def _check(f):
    if not isinstance(f, QuantileFunction):
        raise TypeError("%s is not a QuantileFunction" % (f,))

    return f


def _divergent(value, what):
    if np.isfinite(value):
        return value

    warnings.warn("%s diverges, reporting +inf" % what)
    return np.inf


def _power_integral(start, stop, v0, v1, p):
    """ Exact :math:`\\int f^p` over affine pieces, with f <= 1 """
    h = stop - start

    if p == 1.0:
        return np.sum(0.5 * h * (v0 + v1))

    drop = v0 - v1
    closed = drop > _CANCELLATION * v0

    with np.errstate(invalid='ignore', divide='ignore'):
        exact = h * (v0 ** (p + 1) - v1 ** (p + 1)) / ((p + 1) * drop)

    nodes = v0[:, None] - drop[:, None] * GL_NODES[None, :]
    quad = h * np.sum(GL_WEIGHTS[None, :] * nodes ** p, axis=1)

    return np.sum(np.where(closed, exact, quad))


def lp_norm(f, p, a=0.0, b=1.0):
    """ :math:`(\\int_a^b f^p)^{1/p}` by exact piecewise integration """
    start, stop, v0, v1 = _check(f).pieces(a, b)

    if start.size == 0:
        return 0.0

    if np.isinf(v0).any():
        return _divergent(np.inf, "L%g integral" % p)

    scale = v0.max()

    if scale == 0.0:
        return 0.0

    total = _power_integral(start, stop, v0 / scale, v1 / scale, p)

    return _divergent(scale * total ** (1.0 / p), "L%g integral" % p)


def lorentz_norm(f, p, q, a=0.0, b=1.0):
    """
    :math:`((q/p) \\int_a^b t^{q/p - 1} f(t)^q dt)^{1/q}`, integrated
    in :math:`s = t^{q/p}` where the weight disappears
    """
    start, stop, v0, v1 = _check(f).pieces(a, b)

    if start.size == 0:
        return 0.0

    if np.isinf(v0).any():
        return _divergent(np.inf, "L%g,%g integral" % (p, q))

    scale = v0.max()

    if scale == 0.0:
        return 0.0

    v0, v1 = v0 / scale, v1 / scale
    r = q / p
    s0, s1 = start ** r, stop ** r

    # Constant pieces in closed form
    total = np.sum(np.where(v0 == v1, v0 ** q * (s1 - s0), 0.0))

    affine = v0 != v1

    if affine.any():
        s0, s1 = s0[affine][:, None], s1[affine][:, None]
        t0, t1 = start[affine][:, None], stop[affine][:, None]
        a0, a1 = v0[affine][:, None], v1[affine][:, None]
        s = s0 + (s1 - s0) * GL_NODES[None, :]
        t = np.clip(s ** (1.0 / r), t0, t1)
        values = a0 + (a1 - a0) * (t - t0) / (t1 - t0)
        total += np.sum((s1 - s0) * GL_WEIGHTS[None, :] * values ** q)

    return _divergent(scale * total ** (1.0 / q), "L%g,%g integral" % (p, q))


def ri_eval(M, f, rtol=LUXEMBURG_RTOL):
    """
    Norm of the non-increasing function ``f`` restricted to
    :math:`[0, 1]` in the rearrangement invariant space ``M``.

    Parameters
    ----------
    M : :class:`~rinorms.norms.specs.RiNormSpec`
        :class:`Lp`, :class:`Lorentz` or :class:`Orlicz`
    f : :class:`~rinorms.rearrange.QuantileFunction`
        Non-increasing function, usually on :math:`[0, 1]`
    rtol : float, optional
        Relative tolerance of the Luxemburg bisection

    Returns
    -------
    float
        The norm, +inf if an integral diverges.
    """
    _check(f)

    if isinstance(M, Lp):
        return lp_norm(f, M.p)
    elif isinstance(M, Lorentz):
        return lorentz_norm(f, M.p, M.q)
    elif isinstance(M, Orlicz):
        if not M.phi.is_normalized():
            warnings.warn("%s has Φ(1)=%r, the norm of 1 is not 1"
                          % (M.phi.label, M.phi.at_one()))

        value = function_luxemburg(M.phi, f, 0.0, 1.0, rtol=rtol)
        return _divergent(value, "%s modular" % M.phi.label)
    elif isinstance(M, RiNormSpec):
        raise NotImplementedError("No evaluator for %s" % (M,))

    raise TypeError("%s is not an r.i. norm spec" % (M,))


def theta_luxemburg(theta, f, rtol=LUXEMBURG_RTOL):
    """
    Luxemburg norm of ``f`` under ``theta`` over its whole
    domain :math:`[0, L]`
    """
    value = function_luxemburg(theta, _check(f), 0.0, f.length, rtol=rtol)
    return _divergent(value, "%s modular" % theta.label)
