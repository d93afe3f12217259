# -*- coding: utf-8 -*-


from collections import namedtuple
import json

import numpy as np


class InsufficientSamplesError(ValueError):
    """ Raised when a sample cannot resolve the requested statistic """
    pass


def jsonable(value):
    """
    Converts numpy scalars and arrays, namedtuples and
    tuples into plain JSON-serialisable python values
    """
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    elif isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    elif isinstance(value, np.bool_):
        return bool(value)
    elif isinstance(value, np.integer):
        return int(value)
    elif isinstance(value, np.floating):
        return float(value)
    elif isinstance(value, tuple) and hasattr(value, "_asdict"):
        return jsonable(value._asdict())
    elif isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]

    return value


class Report(namedtuple("Report", ["experiment", "inputs", "lhs", "rhs",
                                   "ratio", "stderr", "passed",
                                   "details"])):
    """
    Outcome of one check. ``lhs``, ``rhs`` and ``ratio`` are
    numbers, or lists of numbers for checks over a grid.
    ``passed`` is None when a check records ratios without
    asserting a constant.
    """
    __slots__ = ()

    def __new__(cls, experiment, inputs, lhs, rhs, ratio,
                stderr=0.0, passed=None, details=None):
        return super(Report, cls).__new__(cls, experiment, inputs,
                                          lhs, rhs, ratio, stderr,
                                          passed,
                                          {} if details is None
                                          else details)

    def to_dict(self):
        return jsonable({"experiment": self.experiment,
                         "inputs": self.inputs,
                         "lhs": self.lhs,
                         "rhs": self.rhs,
                         "ratio": self.ratio,
                         "stderr": self.stderr,
                         "pass": self.passed,
                         "details": self.details})

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)
