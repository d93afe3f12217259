# flake8: noqa

from rinorms.rearrange.quantile import (QuantileFunction,
                                        NotARearrangementError,
                                        empirical_quantile)
from rinorms.rearrange.disjunctify import (Disjunctification,
                                           disjunctify,
                                           eval_Y,
                                           tabulate,
                                           restrict_unit,
                                           at_integers,
                                           integral,
                                           capped_survival)
