# -*- coding: utf-8 -*-


from collections import Counter
import logging

import numpy as np
from scipy.integrate import quad

from rinorms.constants import (BISECTION_ATOL,
                               QUAD_RTOL,
                               UNIT_MESH_POINTS,
                               GEOMETRIC_MESH_START,
                               GEOMETRIC_MESH_END)
from rinorms.distributions import Distribution, invert_decreasing
from rinorms.rearrange.quantile import QuantileFunction

log = logging.getLogger(__name__)

# Layer-cake head of integrals starting at 0
_HEAD = 1e-6


class Disjunctification(object):
    r"""
    Disjoint sum of the magnitudes :math:`|X_1|, \ldots, |X_n|`,
    described through its non-increasing rearrangement

    .. math::

        Y(t) = \inf \{ s \ge 0 : \Sigma(s) \le t \},
        \quad \Sigma(s) = \sum_i P(|X_i| > s),
        \quad t \in (0, n].

    Identical members are grouped so that :math:`\Sigma` is evaluated
    once per distinct law.
    """
    __slots__ = ("members", "_groups")

    def __init__(self, members):
        members = tuple(members)

        if len(members) == 0:
            raise ValueError("At least one distribution is required")

        for m in members:
            if not isinstance(m, Distribution):
                raise TypeError("%s is not a Distribution" % (m,))

        self.members = members
        self._groups = tuple(Counter(members).items())

    @property
    def n(self):
        return len(self.members)

    def total_survival(self, s):
        r""" :math:`\Sigma(s)` """
        s = np.asarray(s, dtype=np.float64)
        return sum(c * d.survival(s) for d, c in self._groups)

    def total_survival_left(self, s):
        r""" :math:`\Sigma(s^-) = \sum_i P(|X_i| \ge s)` """
        s = np.asarray(s, dtype=np.float64)
        return sum(c * d.survival_left(s) for d, c in self._groups)

    def _check_domain(self, t):
        t = np.asarray(t, dtype=np.float64)

        if np.any(t <= 0):
            raise ValueError("Y may be infinite at 0")

        if np.any(t > self.n):
            raise ValueError("t must lie in (0, %d]" % self.n)

        return t

    def eval(self, t):
        """ Right-continuous :math:`Y(t)` """
        return invert_decreasing(self.total_survival, self._check_domain(t),
                                 atol=BISECTION_ATOL)

    def eval_left(self, t):
        """ Left limit :math:`Y(t^-)` """
        return invert_decreasing(self.total_survival, self._check_domain(t),
                                 strict=True, atol=BISECTION_ATOL)

    def ess_sup(self):
        r""" :math:`Y(0^+)`, the essential supremum of :math:`\max |X_i|` """
        return float(invert_decreasing(self.total_survival, 0.0,
                                       atol=BISECTION_ATOL))

    def atoms(self):
        return sorted(set(v for d, _ in self._groups for v in d.atoms()))

    def jump_points(self, a=0.0, b=None):
        """
        Points of :math:`(a, b)` at which :math:`Y` may jump,
        the images of member atoms under :math:`\\Sigma`
        """
        b = self.n if b is None else b
        atoms = np.asarray(self.atoms() + [0.0], dtype=np.float64)
        jumps = np.concatenate([self.total_survival(atoms),
                                self.total_survival_left(atoms)])
        jumps = np.unique(jumps)

        return jumps[(jumps > a) & (jumps < b)]

    def mesh(self, length, points=UNIT_MESH_POINTS):
        """
        Positive mesh of :math:`(0, length]`: geometric up to 1/64,
        then both uniform and geometric beyond, with integers and
        jump points added.
        """
        if not length > 0:
            raise ValueError("length %s must be > 0" % length)

        if points < 4:
            raise ValueError("points %d must be >= 4" % points)

        geo_end = min(GEOMETRIC_MESH_END, length)
        geo = np.geomspace(GEOMETRIC_MESH_START, geo_end, points // 2)
        uniform = np.linspace(geo_end, length, points - points // 2)
        tail = np.geomspace(geo_end, length, points // 4)
        integers = np.arange(1, np.floor(length) + 1, dtype=np.float64)

        mesh = np.concatenate([geo, uniform, tail, integers,
                               self.jump_points(0.0, length), [length]])
        mesh = np.unique(mesh)

        return mesh[(mesh > 0) & (mesh <= length)]

    def tabulate(self, length=None, points=UNIT_MESH_POINTS):
        """
        Tabulate :math:`Y` on :math:`[0, length]` as a
        piecewise affine :class:`QuantileFunction`.

        Each piece runs from the right-continuous value at its left
        breakpoint to the left limit at its right breakpoint, so jumps
        at mesh points are represented exactly. The head piece before
        the first mesh point is constant.
        """
        length = float(self.n if length is None else length)

        if length > self.n:
            raise ValueError("length %s exceeds n=%d" % (length, self.n))

        mesh = self.mesh(length, points)
        lims = self.eval_left(mesh)
        values = self.eval(mesh[:-1])

        left = np.concatenate([lims[:1], values])
        right = lims

        # Restore monotonicity lost to bisection tolerance
        interleaved = np.empty(2 * left.shape[0])
        interleaved[0::2] = left
        interleaved[1::2] = right
        interleaved = np.minimum.accumulate(interleaved)

        log.debug("Tabulated Y on [0, %g] over %d pieces",
                  length, left.shape[0])

        return QuantileFunction(np.concatenate([[0.0], mesh]),
                                interleaved[0::2], interleaved[1::2])

    def restrict_unit(self, points=UNIT_MESH_POINTS):
        r""" :math:`Y` restricted to :math:`[0, 1]` """
        return self.tabulate(1.0, points)

    def at_integers(self):
        r""" :math:`(Y(1), \ldots, Y(n))` """
        return self.eval(np.arange(1, self.n + 1, dtype=np.float64))

    def _head_integral(self, eps):
        # Layer cake: int_0^eps Y = eps Y(eps) + int_{Y(eps)}^inf Sigma
        y = float(self.eval(eps))
        top = self.ess_sup()

        if not top > y:
            return eps * y

        def sigma(s):
            return float(self.total_survival(s))

        if np.isinf(top):
            tail, _ = quad(sigma, y, np.inf,
                           epsrel=QUAD_RTOL, epsabs=1e-14, limit=200)
        else:
            atoms = [v for v in self.atoms() if y < v < top]
            tail, _ = quad(sigma, y, top,
                           points=atoms or None,
                           epsrel=QUAD_RTOL, epsabs=1e-14, limit=200)

        return eps * y + tail

    def integral(self, a, b):
        r"""
        :math:`\int_a^b Y(t)\,dt` for :math:`0 \le a < b \le n` by
        adaptive quadrature. The head near 0 is integrated on the
        quantile side, where it is bounded.
        """
        if not 0 <= a < b <= self.n:
            raise ValueError("Require 0 <= a < b <= %d, got [%s, %s]"
                             % (self.n, a, b))

        head = 0.0

        if a == 0:
            a = min(_HEAD, b)
            head = self._head_integral(a)

            if a == b:
                return head

        jumps = self.jump_points(a, b)

        body, _ = quad(lambda t: float(self.eval(t)), a, b,
                       points=jumps if jumps.size else None,
                       epsrel=QUAD_RTOL, epsabs=1e-13, limit=200)

        return head + body

    def capped_survival(self, s):
        r""" :math:`\min(1, \Sigma(s))` """
        return np.minimum(1.0, self.total_survival(s))

    def __repr__(self):
        return "Disjunctification(n=%d, distinct=%d)" % (
            self.n, len(self._groups))


def disjunctify(dists):
    """ Disjoint sum of the given distributions """
    return Disjunctification(dists)


def eval_Y(dj, t):
    r""" :math:`Y(t)` for :math:`t \in (0, n]` """
    return dj.eval(t)


def tabulate(dj, length=None, points=UNIT_MESH_POINTS):
    """ Piecewise affine tabulation of :math:`Y` on :math:`[0, length]` """
    return dj.tabulate(length, points)


def restrict_unit(dj, points=UNIT_MESH_POINTS):
    r""" :math:`Y|_{[0, 1]}` as a :class:`QuantileFunction` """
    return dj.restrict_unit(points)


def at_integers(dj):
    r""" :math:`(Y(1), \ldots, Y(n))` """
    return dj.at_integers()


def integral(dj, a, b):
    r""" :math:`\int_a^b Y` """
    return dj.integral(a, b)


def capped_survival(dj, s):
    r""" :math:`\min(1, \Sigma(s))` """
    return dj.capped_survival(s)
