# -*- coding: utf-8 -*-


from rinorms.distributions.distributions import (Gaussian, Exponential,
                                                 Uniform, TwoPoint,
                                                 ScaledAbsBase)


def _gaussian(literal):
    return Gaussian(literal.get("sigma", 1.0))


def _exponential(literal):
    return Exponential(literal.get("rate", 1.0))


def _uniform(literal):
    return Uniform(literal.get("b", 1.0))


def _two_point(literal):
    return TwoPoint(literal.get("v", 1.0), literal.get("p", 1.0))


def _scaled(literal):
    try:
        base = literal["base"]
    except KeyError:
        raise ValueError("scaled distribution literal %s "
                         "has no 'base'" % (literal,))

    return ScaledAbsBase(literal.get("a", 1.0), from_literal(base))


_KIND_MAP = {
    'gaussian': _gaussian,
    'exponential': _exponential,
    'uniform': _uniform,
    'two_point': _two_point,
    'scaled': _scaled,
}

_FIELD_MAP = {
    Gaussian: ('gaussian', ('sigma',)),
    Exponential: ('exponential', ('rate',)),
    Uniform: ('uniform', ('b',)),
    TwoPoint: ('two_point', ('v', 'p')),
}


def from_literal(literal):
    """
    Create a distribution from a configuration literal.

    .. code-block:: python

        from_literal({"kind": "scaled", "a": 0.7,
                      "base": {"kind": "gaussian", "sigma": 1.0}})

    Parameters
    ----------
    literal : dict
        Dictionary with a ``kind`` key in
        ``{'gaussian', 'exponential', 'uniform', 'two_point', 'scaled'}``
        and the parameters of that kind.

    Returns
    -------
    :class:`rinorms.distributions.Distribution`
    """
    if not isinstance(literal, dict):
        raise ValueError("Distribution literal %s is not a dict"
                         % (literal,))

    try:
        kind = literal["kind"]
    except KeyError:
        raise ValueError("Distribution literal %s has no 'kind'"
                         % (literal,))

    try:
        factory = _KIND_MAP[kind]
    except KeyError:
        raise ValueError("Unknown distribution kind '%s'. "
                         "Valid kinds are %s"
                         % (kind, sorted(_KIND_MAP.keys())))

    return factory(literal)


def to_literal(dist):
    """ Inverse of :func:`from_literal` """
    if isinstance(dist, ScaledAbsBase):
        return {"kind": "scaled", "a": dist.a,
                "base": to_literal(dist.base)}

    kind, fields = _FIELD_MAP[type(dist)]
    literal = {"kind": kind}
    literal.update((f, getattr(dist, f)) for f in fields)

    return literal
