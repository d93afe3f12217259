# -*- coding: utf-8 -*-


from collections import namedtuple

import numpy as np
from scipy.special import erfc, ndtri

from rinorms.distributions.inversion import invert_decreasing


_SQRT2 = np.sqrt(2.0)


class Distribution(object):
    """
    Law of the magnitude :math:`|X|` of a real random variable.

    Sub-classes are immutable namedtuples and provide exact
    survival and quantile functions. Values are never signed:
    every operation acts on :math:`|X|`.
    """
    __slots__ = ()

    # Gaussian(1.0) and Exponential(1.0) are equal as tuples
    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__,) + tuple(self))

    def survival(self, t):
        r""" :math:`P(|X| > t)` """
        raise NotImplementedError

    def survival_left(self, t):
        r""" :math:`P(|X| \ge t)`, the left limit of the survival """
        return self.survival(t)

    def quantile(self, u):
        r"""
        :math:`Q(u) = \inf\{t \ge 0 : S(t) \le u\}` for
        :math:`u \in (0, 1]`.

        The generic implementation inverts the survival function
        numerically. Sub-classes override it with closed forms.
        """
        return invert_decreasing(self.survival, u, atol=1e-12)

    def mean(self):
        r""" :math:`E|X|` """
        raise NotImplementedError

    def atoms(self):
        """ Values of :math:`|X|` carrying positive probability """
        return ()

    def quantile_breaks(self):
        """ Points of :math:`(0, 1)` at which the quantile jumps """
        return ()

    def sample(self, stream, count):
        """
        Inverse transform sampling: one uniform of ``stream``
        is consumed per draw.
        """
        if count < 1:
            raise ValueError("count %d must be >= 1" % count)

        return self.quantile(1.0 - stream.random(count))


def _t(t):
    return np.asarray(t, dtype=np.float64)


class Gaussian(Distribution, namedtuple("Gaussian", "sigma")):
    __slots__ = ()

    def __new__(cls, sigma=1.0):
        if not sigma > 0:
            raise ValueError("sigma %s must be > 0" % sigma)

        return super(Gaussian, cls).__new__(cls, float(sigma))

    def survival(self, t):
        t = _t(t)
        return np.where(t < 0, 1.0, erfc(np.abs(t) / (self.sigma * _SQRT2)))

    def quantile(self, u):
        return -self.sigma * ndtri(0.5 * _t(u))

    def mean(self):
        return self.sigma * np.sqrt(2.0 / np.pi)


class Exponential(Distribution, namedtuple("Exponential", "rate")):
    __slots__ = ()

    def __new__(cls, rate=1.0):
        if not rate > 0:
            raise ValueError("rate %s must be > 0" % rate)

        return super(Exponential, cls).__new__(cls, float(rate))

    def survival(self, t):
        t = _t(t)
        return np.where(t < 0, 1.0, np.exp(-self.rate * np.abs(t)))

    def quantile(self, u):
        return -np.log(_t(u)) / self.rate

    def mean(self):
        return 1.0 / self.rate


class Uniform(Distribution, namedtuple("Uniform", "b")):
    """ Uniform on :math:`(0, b)` """
    __slots__ = ()

    def __new__(cls, b=1.0):
        if not b > 0:
            raise ValueError("b %s must be > 0" % b)

        return super(Uniform, cls).__new__(cls, float(b))

    def survival(self, t):
        return np.clip(1.0 - _t(t) / self.b, 0.0, 1.0)

    def quantile(self, u):
        return self.b * (1.0 - _t(u))

    def mean(self):
        return 0.5 * self.b


class TwoPoint(Distribution, namedtuple("TwoPoint", "v p")):
    """ :math:`|X| = v` with probability :math:`p`, otherwise 0 """
    __slots__ = ()

    def __new__(cls, v=1.0, p=1.0):
        if not 0 < p <= 1:
            raise ValueError("p %s must lie in (0, 1]" % p)

        return super(TwoPoint, cls).__new__(cls, abs(float(v)), float(p))

    def survival(self, t):
        t = _t(t)
        return np.where(t < 0, 1.0, np.where(t < self.v, self.p, 0.0))

    def survival_left(self, t):
        t = _t(t)
        return np.where(t <= 0, 1.0, np.where(t <= self.v, self.p, 0.0))

    def quantile(self, u):
        return np.where(_t(u) < self.p, self.v, 0.0)

    def mean(self):
        return self.v * self.p

    def atoms(self):
        return (self.v,) if self.p == 1.0 else (self.v, 0.0)

    def quantile_breaks(self):
        return (self.p,) if self.p < 1.0 else ()


class ScaledAbsBase(Distribution, namedtuple("ScaledAbsBase", "a base")):
    """ Law of :math:`|a X|` where :math:`X` follows ``base`` """
    __slots__ = ()

    def __new__(cls, a, base):
        if not isinstance(base, Distribution):
            raise TypeError("base %s is not a Distribution" % (base,))

        return super(ScaledAbsBase, cls).__new__(cls, abs(float(a)), base)

    def survival(self, t):
        t = _t(t)

        if self.a == 0.0:
            return np.where(t < 0, 1.0, 0.0)

        return self.base.survival(t / self.a)

    def survival_left(self, t):
        t = _t(t)

        if self.a == 0.0:
            return np.where(t <= 0, 1.0, 0.0)

        return self.base.survival_left(t / self.a)

    def quantile(self, u):
        if self.a == 0.0:
            return np.zeros_like(_t(u))

        return self.a * self.base.quantile(u)

    def mean(self):
        return self.a * self.base.mean()

    def atoms(self):
        if self.a == 0.0:
            return (0.0,)

        return tuple(self.a * v for v in self.base.atoms())

    def quantile_breaks(self):
        return () if self.a == 0.0 else self.base.quantile_breaks()


def survival(dist, t):
    r""" :math:`P(|X| > t)` of ``dist`` """
    return dist.survival(t)


def quantile(dist, u):
    """ Quantile :math:`Q(u)` of ``dist`` """
    u = _t(u)

    if np.any((u <= 0) | (u > 1)):
        raise ValueError("u must lie in (0, 1]")

    return dist.quantile(u)


def sample(dist, stream, count):
    """ ``count`` draws of :math:`|X|` consuming one uniform each """
    return dist.sample(stream, count)


def normalized(dist):
    r""" Rescale ``dist`` so that :math:`E|X| = 1` """
    mean = dist.mean()

    if not mean > 0:
        raise ValueError("%s has zero mean and cannot be normalized"
                         % (dist,))

    return ScaledAbsBase(1.0 / mean, dist)


def draw_matrix(dists, stream, count):
    """
    Draw ``count`` independent realisations of the vector
    :math:`(|X_1|, \\ldots, |X_n|)`.

    Each row consumes ``n`` consecutive uniforms of ``stream``,
    so that one stream position maps onto one draw.

    Returns
    -------
    :class:`numpy.ndarray`
        Array of shape :code:`(count, n)`
    """
    if len(dists) == 0:
        raise ValueError("At least one distribution is required")

    u = 1.0 - stream.random((count, len(dists)))
    draws = np.empty_like(u)

    for i, dist in enumerate(dists):
        draws[:, i] = dist.quantile(u[:, i])

    return draws
