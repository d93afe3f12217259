# -*- coding: utf-8 -*-


import warnings

import numpy as np

from rinorms.constants import LUXEMBURG_RTOL
from rinorms.norms.kernels import abel_sums, sorted_magnitudes, top_m_sums
from rinorms.norms.luxemburg import sequence_luxemburg
from rinorms.norms.specs import (LpSeq, Linf, TopM, OrliczSeq,
                                 SeqNormSpec)


def _lp_rows(xs, p):
    scale = xs.max(axis=1)
    safe = np.where(scale > 0, scale, 1.0)
    total = np.sum((xs / safe[:, None]) ** p, axis=1)

    return np.where(scale > 0, scale * total ** (1.0 / p), 0.0)


def seq_eval_rows(N, xs, rtol=LUXEMBURG_RTOL):
    """
    Sequence norm of every row of a sample matrix.

    Parameters
    ----------
    N : :class:`~rinorms.norms.specs.SeqNormSpec`
        :class:`LpSeq`, :class:`Linf`, :class:`TopM`
        or :class:`OrliczSeq`
    xs : :class:`numpy.ndarray`
        Finite values of shape :code:`(rows, n)`.
        Only magnitudes are used.
    rtol : float, optional
        Relative tolerance of the Luxemburg bisection

    Returns
    -------
    :class:`numpy.ndarray`
        Norms of shape :code:`(rows,)`
    """
    xs = np.asarray(xs, dtype=np.float64)

    if xs.ndim != 2:
        raise ValueError("xs must have shape (rows, n)")

    if not np.all(np.isfinite(xs)):
        raise ValueError("xs must be finite")

    if xs.shape[1] == 0:
        return np.zeros(xs.shape[0])

    if isinstance(N, Linf):
        return np.abs(xs).max(axis=1)
    elif isinstance(N, TopM):
        return top_m_sums(sorted_magnitudes(xs), N.m)
    elif isinstance(N, LpSeq):
        if N.p == 1.0:
            # Summing in descending order makes TopM(n) agree exactly
            return top_m_sums(sorted_magnitudes(xs), xs.shape[1])

        return _lp_rows(np.abs(xs), N.p)
    elif isinstance(N, OrliczSeq):
        if not N.psi.is_normalized():
            warnings.warn("%s has Ψ(1)=%r, the norm of e_1 is not 1"
                          % (N.psi.label, N.psi.at_one()))

        return sequence_luxemburg(N.psi, xs, rtol=rtol)
    elif isinstance(N, SeqNormSpec):
        raise NotImplementedError("No evaluator for %s" % (N,))

    raise TypeError("%s is not a sequence norm spec" % (N,))


def seq_eval(N, x, rtol=LUXEMBURG_RTOL):
    """ Sequence norm of the vector ``x``, 0 when ``x`` is empty """
    x = np.asarray(x, dtype=np.float64).ravel()
    return float(seq_eval_rows(N, x[None, :], rtol=rtol)[0])


def abel_expand(N, x, y):
    """
    Abel expansion of the rearranged inner product

    .. math::

        \\sum_i x^*_i y^*_i = \\sum_m (y^*_m - y^*_{m+1})
            \\|x\\|_{k_m}, \\quad y^*_{n+1} = 0

    Parameters
    ----------
    N : :class:`~rinorms.norms.specs.SeqNormSpec`
        Sequence norm whose dual ball ``y`` is drawn from.
        The identity holds for any ``N``.
    x, y : :class:`numpy.ndarray`
        Vectors of equal length

    Returns
    -------
    tuple
        :code:`(direct, expanded)`, equal up to rounding
    """
    if not isinstance(N, SeqNormSpec):
        raise TypeError("%s is not a sequence norm spec" % (N,))

    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()

    if x.shape != y.shape:
        raise ValueError("x %s and y %s differ in length"
                         % (x.shape, y.shape))

    xs = sorted_magnitudes(x[None, :])[0]
    ys = sorted_magnitudes(y[None, :])[0]

    return abel_sums(xs, ys)
