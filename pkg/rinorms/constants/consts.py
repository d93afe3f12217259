__all__ = ["BISECTION_ATOL", "QUAD_RTOL", "LAMBDA_RTOL",
           "LUXEMBURG_RTOL", "DIVERGENCE_LIMIT",
           "UNIT_MESH_POINTS", "GEOMETRIC_MESH_END", "GEOMETRIC_MESH_START",
           "LAMBDA_HEAD", "DILATION_FACTOR", "DILATION_CONSTANT",
           "TAIL_PROBABILITY", "TAIL_THRESHOLD", "TAIL_RESOLUTION",
           "THETA_P_CONSTANT", "P_THETA_CONSTANT"]

import numpy as np

# Root finding and quadrature tolerances
BISECTION_ATOL = 1e-10
QUAD_RTOL = 1e-8
LAMBDA_RTOL = 1e-7
LUXEMBURG_RTOL = 1e-10

# Integrals or partial sums beyond this are reported as +inf
DIVERGENCE_LIMIT = 1e12

# Tabulation mesh of Y on (0, 1]
UNIT_MESH_POINTS = 2048
GEOMETRIC_MESH_START = 2.0**-40
GEOMETRIC_MESH_END = 1.0 / 64.0

# Quantile-side quadrature stops refining here
LAMBDA_HEAD = 1e-10

# f(./100) has P norm at most 200 times that of f
DILATION_FACTOR = 100.0
DILATION_CONSTANT = 200.0

# ||(X_i)||_N exceeds 200 ||Y||_P with probability at most 1/(4e)
TAIL_PROBABILITY = 1.0 / (4.0 * np.e)
TAIL_THRESHOLD = 200.0

# Order statistics need this many samples above the tail level
TAIL_RESOLUTION = 10.0

# ||f||_P <= 4 ||f||_Theta and ||f||_Theta <= 3 ||f||_P
THETA_P_CONSTANT = 4.0
P_THETA_CONSTANT = 3.0
