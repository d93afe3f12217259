# -*- coding: utf-8 -*-


from collections import namedtuple

import numpy as np

# Normalisation tolerance on Phi(1) and Psi(1)
NORMALISATION_ATOL = 1e-9

# Grid on which Orlicz function properties are checked
CHECK_GRID = np.linspace(0.0, 10.0, 1000)


class OrliczFunction(namedtuple("OrliczFunction",
                                "evaluator label is_convex_claimed")):
    """
    Non-negative, non-decreasing function vanishing at 0,
    evaluated elementwise on arrays.

    Parameters
    ----------
    evaluator : callable
        Vectorised function of :code:`x >= 0`
    label : str
        Name under which the function is addressable,
        ``power:2`` for instance
    is_convex_claimed : bool
        Whether the function is known to be convex
    """
    __slots__ = ()

    def __call__(self, x):
        return self.evaluator(np.asarray(x, dtype=np.float64))

    # Closures never compare equal, labels identify the function
    def __eq__(self, other):
        return (isinstance(other, OrliczFunction) and
                (self.label, self.is_convex_claimed) ==
                (other.label, other.is_convex_claimed))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.label, self.is_convex_claimed))

    def at_one(self):
        return float(self(1.0))

    def is_normalized(self, atol=NORMALISATION_ATOL):
        return abs(self.at_one() - 1.0) <= atol

    def validate(self, grid=CHECK_GRID, rtol=1e-12):
        """
        Check that the function vanishes at 0 and is non-decreasing
        on ``grid``. Midpoint convexity is checked on a uniform grid
        when convexity is claimed.

        Raises
        ------
        ValueError
            If a property fails.
        """
        values = self(grid)

        if self(0.0) != 0.0:
            raise ValueError("%s does not vanish at 0" % self.label)

        if np.any(np.isnan(values)) or np.any(values < 0):
            raise ValueError("%s takes negative values" % self.label)

        tol = rtol * np.abs(values[1:])

        if np.any(np.diff(values) < -tol):
            raise ValueError("%s is not non-decreasing" % self.label)

        if self.is_convex_claimed:
            mid = 0.5 * (values[:-2] + values[2:])

            if np.any(values[1:-1] > mid + rtol * np.abs(mid)):
                raise ValueError("%s is claimed convex but is not"
                                 % self.label)

        return self

    def __repr__(self):
        return "OrliczFunction(%s)" % self.label


def power(p):
    """ :math:`x \\mapsto x^p` """
    p = float(p)

    if not p > 0:
        raise ValueError("power %s must be > 0" % p)

    def evaluator(x):
        return np.abs(x) ** p

    return OrliczFunction(evaluator, "power:%g" % p, p >= 1)


def _exp_gauss(x):
    x = np.abs(x)

    with np.errstate(divide='ignore', over='ignore'):
        value = np.exp(1.0 - 1.0 / (x * x))

    return np.where(x == 0, 0.0, value)


def exp_gauss(m=None):
    """
    Without ``m``, :math:`x \\mapsto \\exp(1 - 1/x^2)` extended by 0
    at 0. This is not convex near 0.

    With ``m``, :math:`x \\mapsto x e^{-1/(mx)^2}`, the Orlicz function
    of the sum of the ``m`` largest Gaussians.
    """
    if m is None:
        return OrliczFunction(_exp_gauss, "exp_gauss", False)

    m = int(m)

    if m < 1:
        raise ValueError("m %d must be >= 1" % m)

    def evaluator(x):
        x = np.abs(x)

        with np.errstate(divide='ignore', over='ignore'):
            value = x * np.exp(-1.0 / (m * x) ** 2)

        return np.where(x == 0, 0.0, value)

    return OrliczFunction(evaluator, "exp_gauss:%d" % m, False)


def theta_top_m(m):
    """ :math:`x \\mapsto (x - 1/m)^+` """
    m = int(m)

    if m < 1:
        raise ValueError("m %d must be >= 1" % m)

    def evaluator(x):
        return np.maximum(np.abs(x) - 1.0 / m, 0.0)

    return OrliczFunction(evaluator, "theta_top_m:%d" % m, True)


def make_theta(phi, psi):
    """
    Splice :math:`\\Theta = \\Psi` on :math:`[0, 1]` and
    :math:`\\Theta = \\Phi` on :math:`[1, \\infty)`.

    Parameters
    ----------
    phi : :class:`OrliczFunction`
        Orlicz function of the function space, :math:`\\Phi(1) = 1`
    psi : :class:`OrliczFunction`
        Orlicz function of the sequence space, :math:`\\Psi(1) = 1`

    Returns
    -------
    :class:`OrliczFunction`
        The splice, which is not claimed convex.
    """
    if not (phi.is_normalized() and psi.is_normalized()):
        raise ValueError("Φ(1)=Ψ(1)=1 required, got Φ(1)=%r, Ψ(1)=%r"
                         % (phi.at_one(), psi.at_one()))

    def evaluator(x):
        x = np.abs(x)
        return np.where(x <= 1.0, psi(x), phi(x))

    return OrliczFunction(evaluator,
                          "spliced:%s,%s" % (phi.label, psi.label),
                          False)


def orlicz_from_name(name):
    """
    Orlicz function addressed by name:

    * ``power:p``
    * ``theta_top_m:m``
    * ``exp_gauss`` or ``exp_gauss:m``
    * ``spliced:phi,psi``, where ``phi`` and ``psi`` are names
    """
    if isinstance(name, OrliczFunction):
        return name

    kind, _, args = str(name).strip().partition(":")

    try:
        if kind == "power":
            return power(float(args))
        elif kind == "theta_top_m":
            return theta_top_m(int(args))
        elif kind == "exp_gauss":
            return exp_gauss(int(args) if args else None)
        elif kind == "spliced":
            phi, sep, psi = args.partition(",")

            if not sep:
                raise ValueError("expected 'spliced:phi,psi'")

            return make_theta(orlicz_from_name(phi), orlicz_from_name(psi))
    except ValueError as e:
        raise ValueError("Invalid Orlicz function '%s': %s" % (name, e))

    raise ValueError("Unknown Orlicz function '%s'" % name)
