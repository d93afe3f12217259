# -*- coding: utf-8 -*-


import logging

import numpy as np

from rinorms.constants import BISECTION_ATOL

log = logging.getLogger(__name__)

# 2**1024 overflows, no survival function is unresolved that far out
_MAX_DOUBLINGS = 1023
_MAX_BISECTIONS = 200


def invert_decreasing(func, level, strict=False, atol=BISECTION_ATOL):
    """
    Generalised inverse of a non-increasing function on :math:`[0, \\infty)`

    .. math::

        s^{*}(\\ell) = \\inf \\{ s \\ge 0 : F(s) \\le \\ell \\}

    computed by vectorised bisection over all requested levels at once.
    The upper end of each bracket starts at 1 and is doubled until the
    predicate holds.

    Parameters
    ----------
    func : callable
        Vectorised, non-increasing function of :code:`s`.
    level : float or :class:`numpy.ndarray`
        Levels :math:`\\ell` at which to invert.
    strict : bool, optional
        Use :math:`F(s) < \\ell` instead, which produces the left limit
        of the generalised inverse. Defaults to False.
    atol : float, optional
        Absolute tolerance on :code:`s`.

    Returns
    -------
    :class:`numpy.ndarray`
        Inverse values, with the same shape as :code:`level`.
        The returned value always satisfies the predicate, so it
        is at most ``atol`` above the exact infimum.
    """
    level = np.asarray(level, dtype=np.float64)
    shape = level.shape
    level = level.ravel()

    def predicate(s):
        value = func(s)
        return value < level if strict else value <= level

    lo = np.zeros_like(level)
    hi = np.ones_like(level)
    result = np.full_like(level, np.nan)

    done = predicate(lo)
    result[done] = 0.0

    # Grow the bracket
    todo = ~done
    doublings = 0

    while True:
        ok = predicate(hi)
        grow = todo & ~ok

        if not grow.any():
            break

        if doublings == _MAX_DOUBLINGS:
            log.debug("%d levels unresolved after %d doublings",
                      grow.sum(), doublings)
            result[grow] = np.inf
            todo &= ~grow
            break

        lo[grow] = hi[grow]
        hi[grow] *= 2.0
        doublings += 1

    # Bisect all brackets simultaneously
    for _ in range(_MAX_BISECTIONS):
        if not todo.any() or np.all((hi - lo)[todo] <= atol):
            break

        mid = 0.5 * (lo + hi)
        ok = predicate(mid)
        hi = np.where(todo & ok, mid, hi)
        lo = np.where(todo & ~ok, mid, lo)

    result[todo] = hi[todo]

    return result.reshape(shape)
