# -*- coding: utf-8 -*-


from collections import namedtuple

from rinorms.orlicz.functions import (OrliczFunction,
                                      orlicz_from_name,
                                      power)


class _Spec(object):
    __slots__ = ()

    # LpSeq(1.0) and TopM(1) would otherwise compare equal
    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__,) + tuple(self))


class RiNormSpec(_Spec):
    """
    Rearrangement invariant norm :math:`M` on :math:`[0, 1]`,
    normalised so that the constant 1 has norm 1.
    ``embed`` records an exponent :math:`q` with :math:`L_q`
    embedding into :math:`M`.
    """
    __slots__ = ()

    def as_orlicz(self):
        """ Orlicz function generating this norm, or None """
        return None


class SeqNormSpec(_Spec):
    """
    Symmetric sequence norm :math:`N`, normalised so that
    :math:`\\|e_1\\|_N = 1`.
    """
    __slots__ = ()

    def as_orlicz(self):
        return None


def _check_exponent(name, p):
    p = float(p)

    if not p >= 1:
        raise ValueError("%s %s must be >= 1" % (name, p))

    return p


def _check_orlicz(phi):
    phi = orlicz_from_name(phi)

    if not isinstance(phi, OrliczFunction):
        raise TypeError("%s is not an OrliczFunction" % (phi,))

    return phi


class Lp(RiNormSpec, namedtuple("Lp", "p embed")):
    __slots__ = ()

    def __new__(cls, p, embed=1.0):
        return super(Lp, cls).__new__(cls, _check_exponent("p", p),
                                      _check_exponent("embed", embed))

    def as_orlicz(self):
        return power(self.p)


class Lorentz(RiNormSpec, namedtuple("Lorentz", "p q embed")):
    """ Lorentz space :math:`L_{p,q}` """
    __slots__ = ()

    def __new__(cls, p, q, embed=1.0):
        return super(Lorentz, cls).__new__(cls, _check_exponent("p", p),
                                           _check_exponent("q", q),
                                           _check_exponent("embed", embed))


class Orlicz(RiNormSpec, namedtuple("Orlicz", "phi embed")):
    """ Orlicz space :math:`L_\\Phi` with the Luxemburg norm """
    __slots__ = ()

    def __new__(cls, phi, embed=1.0):
        return super(Orlicz, cls).__new__(cls, _check_orlicz(phi),
                                          _check_exponent("embed", embed))

    def as_orlicz(self):
        return self.phi


class LpSeq(SeqNormSpec, namedtuple("LpSeq", "p")):
    """ :math:`\\ell_p` """
    __slots__ = ()

    def __new__(cls, p):
        return super(LpSeq, cls).__new__(cls, _check_exponent("p", p))

    def as_orlicz(self):
        return power(self.p)


class Linf(SeqNormSpec, namedtuple("Linf", [])):
    """ :math:`\\ell_\\infty` """
    __slots__ = ()


class TopM(SeqNormSpec, namedtuple("TopM", "m")):
    """ :math:`k_m`, the sum of the ``m`` largest magnitudes """
    __slots__ = ()

    def __new__(cls, m):
        if int(m) != m or m < 1:
            raise ValueError("m %s must be an integer >= 1" % m)

        return super(TopM, cls).__new__(cls, int(m))


class OrliczSeq(SeqNormSpec, namedtuple("OrliczSeq", "psi")):
    """ Orlicz sequence space :math:`\\ell_\\Psi` """
    __slots__ = ()

    def __new__(cls, psi):
        return super(OrliczSeq, cls).__new__(cls, _check_orlicz(psi))

    def as_orlicz(self):
        return self.psi


def as_orlicz(spec):
    """ Orlicz function generating ``spec``, or None """
    return spec.as_orlicz()


def _orlicz_name(literal, key):
    name = literal[key]

    for param in ("p", "m"):
        if param in literal:
            name = "%s:%s" % (name, literal[param])

    return name


def ri_from_literal(literal):
    """
    :class:`RiNormSpec` from a config literal such as
    ``{"ri": "lorentz", "p": 2, "q": 1}`` or
    ``{"ri": "orlicz", "phi": "power", "p": 3}``
    """
    if not isinstance(literal, dict) or "ri" not in literal:
        raise ValueError("%r is not an r.i. norm literal" % (literal,))

    kind = literal["ri"]
    embed = literal.get("embed", 1.0)

    if kind == "lp":
        return Lp(literal["p"], embed)
    elif kind == "lorentz":
        return Lorentz(literal["p"], literal["q"], embed)
    elif kind == "orlicz":
        return Orlicz(_orlicz_name(literal, "phi"), embed)

    raise ValueError("Unknown r.i. norm '%s'" % kind)


def seq_from_literal(literal):
    """
    :class:`SeqNormSpec` from a config literal such as
    ``{"seq": "top_m", "m": 4}`` or
    ``{"seq": "orlicz", "psi": "exp_gauss", "m": 2}``
    """
    if not isinstance(literal, dict) or "seq" not in literal:
        raise ValueError("%r is not a sequence norm literal" % (literal,))

    kind = literal["seq"]

    if kind == "lp":
        return LpSeq(literal["p"])
    elif kind == "linf":
        return Linf()
    elif kind == "top_m":
        return TopM(literal["m"])
    elif kind == "orlicz":
        return OrliczSeq(_orlicz_name(literal, "psi"))

    raise ValueError("Unknown sequence norm '%s'" % kind)


def from_literal(literal):
    """ Either kind of norm spec from its literal """
    if isinstance(literal, dict) and "ri" in literal:
        return ri_from_literal(literal)

    return seq_from_literal(literal)


def to_literal(spec):
    """ Inverse of :func:`from_literal` """
    if isinstance(spec, Lp):
        return {"ri": "lp", "p": spec.p, "embed": spec.embed}
    elif isinstance(spec, Lorentz):
        return {"ri": "lorentz", "p": spec.p, "q": spec.q,
                "embed": spec.embed}
    elif isinstance(spec, Orlicz):
        return {"ri": "orlicz", "phi": spec.phi.label, "embed": spec.embed}
    elif isinstance(spec, LpSeq):
        return {"seq": "lp", "p": spec.p}
    elif isinstance(spec, Linf):
        return {"seq": "linf"}
    elif isinstance(spec, TopM):
        return {"seq": "top_m", "m": spec.m}
    elif isinstance(spec, OrliczSeq):
        return {"seq": "orlicz", "psi": spec.psi.label}

    raise TypeError("%s is not a norm spec" % (spec,))
