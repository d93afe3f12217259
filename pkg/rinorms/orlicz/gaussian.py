# -*- coding: utf-8 -*-


import numpy as np
from scipy.special import erfcx

from rinorms.constants import LUXEMBURG_RTOL
from rinorms.norms.luxemburg import sequence_luxemburg
from rinorms.orlicz.functions import exp_gauss


def _check_m(m):
    if int(m) != m or m < 1:
        raise ValueError("m %s must be an integer >= 1" % m)

    return int(m)


def gaussian_lambda_equiv(m, x):
    """
    :math:`x e^{-1/(mx)^2}`, equivalent to :math:`E(x|\\gamma| - 1/m)^+`
    for a standard Gaussian :math:`\\gamma`
    """
    m = _check_m(m)
    x = np.asarray(x, dtype=np.float64)

    if np.any(x <= 0):
        raise ValueError("x must be > 0")

    return x * np.exp(-1.0 / (m * x) ** 2)


def gaussian_lambda_closed(m, x):
    """
    :math:`E(x|\\gamma| - 1/m)^+` in closed form. With
    :math:`c = 1/(mx)`

    .. math::

        \\Lambda(x) = x \\sqrt{2/\\pi} e^{-c^2/2}
            \\left(1 - c \\sqrt{\\pi/2}\\,
            \\mathrm{erfcx}(c/\\sqrt{2})\\right)

    and :math:`\\Lambda(0) = 0`.
    """
    m = _check_m(m)
    x = np.abs(np.asarray(x, dtype=np.float64))

    with np.errstate(divide='ignore', invalid='ignore'):
        c = 1.0 / (m * x)
        bracket = 1.0 - c * np.sqrt(np.pi / 2.0) * erfcx(c / np.sqrt(2.0))
        value = x * np.sqrt(2.0 / np.pi) * np.exp(-0.5 * c * c) * bracket

    return np.where(x == 0, 0.0, np.maximum(value, 0.0))


def exp_gauss_seq_norm(b, rtol=LUXEMBURG_RTOL):
    """
    Luxemburg norm of ``b`` under :math:`\\exp(1 - 1/x^2)` together
    with its sup form :math:`\\sup_i b^*_i \\sqrt{1 + \\log i}`

    Returns
    -------
    tuple
        :code:`(luxemburg, sup_form)`
    """
    b = np.sort(np.abs(np.asarray(b, dtype=np.float64)).ravel())[::-1]

    if b.size == 0:
        return 0.0, 0.0

    weights = np.sqrt(1.0 + np.log(np.arange(1, b.size + 1)))
    luxemburg = sequence_luxemburg(exp_gauss(), b[None, :], rtol=rtol)[0]

    return float(luxemburg), float(np.max(b * weights))


def gauss_rhs_closed(a, m):
    """
    :math:`\\sum_{i \\le m} a^*_i + m \\sup_{1 \\le i \\le n/m}
    a^*_{mi} \\sqrt{1 + \\log i}`, equivalent to the expected sum
    of the ``m`` largest :math:`|a_i \\gamma_i|`
    """
    a = np.sort(np.abs(np.asarray(a, dtype=np.float64)).ravel())[::-1]
    n = a.size

    if int(m) != m or not 1 <= m <= n:
        raise ValueError("m %s must be an integer in [1, %d]" % (m, n))

    m = int(m)
    i = np.arange(1, n // m + 1)
    tail = a[m * i - 1] * np.sqrt(1.0 + np.log(i))

    return float(np.sum(a[:m]) + m * np.max(tail))
