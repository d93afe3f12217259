# flake8: noqa

from rinorms.distributions.distributions import (Distribution,
                                                 Gaussian,
                                                 Exponential,
                                                 Uniform,
                                                 TwoPoint,
                                                 ScaledAbsBase,
                                                 survival,
                                                 quantile,
                                                 sample,
                                                 normalized,
                                                 draw_matrix)
from rinorms.distributions.inversion import invert_decreasing
from rinorms.distributions.literals import from_literal, to_literal
from rinorms.distributions.streams import rng_stream
