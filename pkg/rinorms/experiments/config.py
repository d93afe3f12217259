# -*- coding: utf-8 -*-


from collections import namedtuple
import itertools
import logging
import math

from pkg_resources import resource_filename

from rinorms.distributions import ScaledAbsBase
from rinorms.distributions import from_literal as dist_from_literal
from rinorms.montecarlo import McConfig
from rinorms.norms import TopM, ri_from_literal, seq_from_literal
from rinorms.util.cmdline import load_python_assigns, parse_python_assigns

log = logging.getLogger(__name__)


class ConfigError(ValueError):
    """ Raised on malformed or inconsistent experiment configuration """
    pass


# Recognised configuration keys and their defaults
_DEFAULTS = {
    'experiment': None,
    'dists': None,
    'family': None,
    'M': {'ri': 'lp', 'p': 1},
    'N': {'seq': 'linf'},
    'seed': 1,
    'samples': 10**4,
    'batches': 10,
    'sweep': {},
    'out': None,
    'm': 1,
    'm_fraction': None,
    'p': 1,
    'xi': {'kind': 'gaussian'},
    't_grid': None,
    'parallel': False,
}

SWEEP_KEYS = ('n', 'm', 'p')


def coefficients(kind, n):
    """
    Coefficient vector of length ``n``: ``"flat"`` ones,
    ``"geometric"`` :math:`2^{-i}` or a ``"spike"`` at the first
    index. A list is returned as given.
    """
    if isinstance(kind, (list, tuple)):
        return [float(a) for a in kind]

    if not isinstance(n, int) or n < 1:
        raise ConfigError("Family size n=%r must be an integer >= 1" % (n,))

    if kind == "flat":
        return [1.0] * n
    elif kind == "geometric":
        return [2.0 ** -i for i in range(1, n + 1)]
    elif kind == "spike":
        return [1.0] + [0.0] * (n - 1)

    raise ConfigError("Unknown coefficients '%s'. Valid coefficients are "
                      "'flat', 'geometric', 'spike' or a list" % (kind,))


def _dist(literal):
    try:
        return dist_from_literal(literal)
    except (ValueError, TypeError) as e:
        raise ConfigError(str(e))


def expand_dists(literals):
    """ Distributions of a ``dists`` list, honouring ``count`` keys """
    if not isinstance(literals, (list, tuple)) or len(literals) == 0:
        raise ConfigError("dists must be a non-empty list")

    dists = []

    for literal in literals:
        if not isinstance(literal, dict):
            raise ConfigError("Distribution literal %r is not a dict"
                              % (literal,))

        literal = dict(literal)
        count = literal.pop("count", 1)

        if not isinstance(count, int) or count < 1:
            raise ConfigError("count %r must be an integer >= 1" % (count,))

        dists.extend([_dist(literal)] * count)

    return dists


def build_family(family, n=None):
    """
    Scaled copies :math:`a_i \\xi` of the family's ``base``
    distribution, with :math:`a` from :func:`coefficients`
    """
    try:
        base = _dist(family["base"])
    except (KeyError, TypeError):
        raise ConfigError("family %r has no 'base' distribution"
                          % (family,))

    a = family_coefficients(family, n)

    return [base if c == 1.0 else ScaledAbsBase(c, base) for c in a]


def family_coefficients(family, n=None):
    kind = family.get("coefficients", "flat")
    n = family.get("n") if n is None else n

    return coefficients(kind, n)


class ExperimentConfig(namedtuple("ExperimentConfig",
                                  ["experiment", "dists", "family",
                                   "M", "N", "mc", "sweep", "out",
                                   "options", "literal"])):
    """
    Validated experiment configuration.

    ``literal`` holds the parsed key/value pairs, which
    are recorded in the run summary.
    """
    __slots__ = ()

    def points(self):
        """ Sweep points as dictionaries, in lexicographic order """
        keys = [k for k in SWEEP_KEYS if k in self.sweep]

        if len(keys) == 0:
            return [{}]

        return [dict(zip(keys, values)) for values
                in itertools.product(*(self.sweep[k] for k in keys))]

    def size(self, point):
        if "n" in point:
            return point["n"]
        elif self.family is not None:
            a = self.family.get("coefficients")
            return len(a) if isinstance(a, list) else self.family.get("n")

        return len(self.dists)

    def dists_at(self, point):
        """ The family at a sweep point """
        if self.family is not None:
            return build_family(self.family, self.size(point))

        return list(self.dists)

    def coefficients_at(self, point):
        if self.family is not None:
            return family_coefficients(self.family, self.size(point))

        return [1.0] * len(self.dists)

    def m_at(self, point):
        if "m" in point:
            return point["m"]

        fraction = self.options["m_fraction"]

        if fraction is not None:
            return max(1, int(math.ceil(fraction * self.size(point))))

        return self.options["m"]

    def p_at(self, point):
        return point.get("p", self.options["p"])

    def N_at(self, point):
        """ The sequence norm, with top-m norms following the sweep """
        if isinstance(self.N, TopM):
            return TopM(self.m_at(point))

        return self.N


def _check_sweep(sweep, has_family):
    if not isinstance(sweep, dict):
        raise ConfigError("sweep must be a dict of lists")

    for k, values in sweep.items():
        if k not in SWEEP_KEYS:
            raise ConfigError("Unknown sweep key '%s'. Valid keys are %s"
                              % (k, list(SWEEP_KEYS)))

        if not isinstance(values, (list, tuple)) or len(values) == 0:
            raise ConfigError("sweep '%s' must be a non-empty list" % k)

    if "n" in sweep and not has_family:
        raise ConfigError("A sweep over n requires a 'family'")

    return {k: list(v) for k, v in sweep.items()}


def make_config(literal):
    """
    Validate a dictionary of configuration values.

    Raises
    ------
    ConfigError
        On unknown keys, unparseable literals or
        inconsistent combinations.
    """
    unknown = set(literal) - set(_DEFAULTS)

    if len(unknown) > 0:
        raise ConfigError("Unknown configuration keys %s. Valid keys are %s"
                          % (sorted(unknown), sorted(_DEFAULTS)))

    values = dict(_DEFAULTS)
    values.update(literal)

    if not isinstance(values["experiment"], str):
        raise ConfigError("'experiment' must name an experiment")

    dists, family = values["dists"], values["family"]

    if (dists is None) == (family is None):
        raise ConfigError("Exactly one of 'dists' or 'family' is required")

    if dists is not None:
        dists = expand_dists(dists)

    if family is not None:
        if not isinstance(family, dict):
            raise ConfigError("family must be a dict")

        # Fails early on a bad base or coefficient kind
        if "n" in family or isinstance(family.get("coefficients"), list):
            build_family(family)

    N_literal = values["N"]

    if isinstance(N_literal, dict) and N_literal.get("seq") == "top_m":
        N_literal = dict(N_literal)
        N_literal.setdefault("m", values["m"])

    try:
        M = ri_from_literal(values["M"])
        N = seq_from_literal(N_literal)
        mc = McConfig(values["samples"], values["batches"], values["seed"])
    except (ValueError, TypeError, KeyError) as e:
        raise ConfigError(str(e))

    sweep = _check_sweep(values["sweep"], family is not None)

    if family is not None and "n" not in sweep:
        if "n" not in family and not isinstance(family.get("coefficients"),
                                                list):
            raise ConfigError("family needs 'n' unless n is swept")

    options = {k: values[k] for k in ('m', 'm_fraction', 'p', 'xi',
                                      't_grid', 'parallel')}

    # m given only through N
    if isinstance(N, TopM) and "m" not in literal:
        options["m"] = N.m

    if not isinstance(options["m"], int) or options["m"] < 1:
        raise ConfigError("m %r must be an integer >= 1" % (options["m"],))

    if not isinstance(options["p"], (int, float)) or options["p"] < 1:
        raise ConfigError("p %r must be >= 1" % (options["p"],))

    return ExperimentConfig(values["experiment"], dists, family, M, N, mc,
                            sweep, values["out"], options, values)


def load_config(filename, overrides=None):
    """
    Load an experiment configuration file of python literal
    assignments, applying the ``overrides`` dictionary on top.
    """
    try:
        literal = load_python_assigns(filename)
    except (IOError, OSError) as e:
        raise ConfigError("Unable to read config '%s': %s" % (filename, e))
    except (ValueError, TypeError) as e:
        raise ConfigError("Malformed config '%s': %s" % (filename, e))

    literal.update(overrides or {})
    log.debug("Configuration %s", literal)

    return make_config(literal)


def parse_overrides(assign_str):
    """ ``--set "k=v; ..."`` overrides """
    try:
        return parse_python_assigns(assign_str)
    except (ValueError, TypeError) as e:
        raise ConfigError("Malformed override '%s': %s" % (assign_str, e))


Windows = namedtuple("Windows", "version ranges cv_max")


def load_windows(filename=None):
    """
    Load the versioned ratio windows. The packaged
    ``windows.cfg`` is used when ``filename`` is None.
    """
    if filename is None:
        filename = resource_filename("rinorms.experiments", "windows.cfg")

    try:
        data = load_python_assigns(filename)
    except (IOError, OSError, ValueError, TypeError) as e:
        raise ConfigError("Unable to load windows '%s': %s" % (filename, e))

    try:
        ranges = {k: (float(lo), float(hi))
                  for k, (lo, hi) in data["windows"].items()}
        return Windows(int(data["version"]), ranges, float(data["cv_max"]))
    except (KeyError, ValueError, TypeError) as e:
        raise ConfigError("Malformed windows '%s': %s" % (filename, e))
