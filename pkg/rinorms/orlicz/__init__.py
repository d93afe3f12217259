# flake8: noqa

from rinorms.orlicz.functions import (OrliczFunction,
                                      power,
                                      exp_gauss,
                                      theta_top_m,
                                      make_theta,
                                      orlicz_from_name)
from rinorms.orlicz.transforms import (tilde,
                                       make_lambda,
                                       lambda_function,
                                       lambda_norm,
                                       theta_for)
from rinorms.orlicz.gaussian import (gaussian_lambda_equiv,
                                     gaussian_lambda_closed,
                                     exp_gauss_seq_norm,
                                     gauss_rhs_closed)
