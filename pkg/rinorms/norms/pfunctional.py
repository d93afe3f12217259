# -*- coding: utf-8 -*-


from collections import namedtuple

import numpy as np

from rinorms.norms.ri import ri_eval
from rinorms.norms.seq import seq_eval
from rinorms.norms.specs import RiNormSpec, SeqNormSpec


class PFunctional(namedtuple("PFunctional", "M N total_length")):
    """
    :math:`\\|f\\|_P = \\|f^\\#|_{[0,1]}\\|_M + \\|(f^\\#(i))_{i=1}^n\\|_N`
    for functions on :math:`[0, n]`.

    ``total_length`` may be None, in which case :math:`n` is the
    domain length of the function, rounded up.
    """
    __slots__ = ()

    def __new__(cls, M, N, total_length=None):
        if not isinstance(M, RiNormSpec):
            raise TypeError("%s is not an r.i. norm spec" % (M,))

        if not isinstance(N, SeqNormSpec):
            raise TypeError("%s is not a sequence norm spec" % (N,))

        if total_length is not None:
            if int(total_length) != total_length or total_length < 1:
                raise ValueError("total_length %s must be an integer >= 1"
                                 % total_length)

            total_length = int(total_length)

        return super(PFunctional, cls).__new__(cls, M, N, total_length)

    def length_for(self, f):
        if self.total_length is not None:
            return self.total_length

        return max(int(np.ceil(f.length)), 1)


def p_eval(P, f):
    """ :math:`\\|f\\|_P` with the sequence part sampled at integers """
    n = P.length_for(f)
    head = ri_eval(P.M, f.truncate(1.0))
    values = f(np.arange(1, n + 1, dtype=np.float64))

    return head + seq_eval(P.N, values)


def p_prime_eval(P, f):
    """
    :math:`\\|f^\\#|_{[0,1]}\\|_M +
    \\|(\\int_{i-1}^i f^\\#)_{i=1}^n\\|_N`, the normed variant
    of :func:`p_eval` built from cell averages
    """
    n = P.length_for(f)
    head = ri_eval(P.M, f.truncate(1.0))
    averages = np.array([f.integral(i - 1.0, float(i))
                         for i in range(1, n + 1)])

    return head + seq_eval(P.N, averages)


def dilate_domain(f, factor):
    """ :math:`g(t) = f(t/c)` on :math:`[0, cL]` """
    return f.dilate(factor)
