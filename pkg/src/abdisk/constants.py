"""Numerical tolerances and budgets used across the package.

Every tolerance referenced by the tests and the CLI verify suites lives here.
"""

import math

EULER_GAMMA = 0.57721566490153286060651209008240243

# special functions
POLE_TOL = 1e-12            # distance to a nonpositive integer treated as a pole
DEGENERATE_TOL = 1e-9       # |c - a - b - m| below which the log connection is used
HYP_SERIES_EPS = 2e-17      # relative size of the last retained series term
HYP_MAX_TERMS = 20000       # node budget for one power series
HYP_COND_SWITCH = 10.0      # condition estimate above which the other route is tried
HYP_TARGET = 1e-12          # advertised relative accuracy away from x = 1
HYP_TARGET_NEAR_ONE = 1e-10

# geometry
MOBIUS_TOL = 1e-12

# radial / spectral
BOUND_STATE_TOL = 1e-9      # gamma argument this close to a pole means bound state

# quadrature
QUAD_REL_TOL = 1e-9
QUAD_ABS_TOL = 1e-15
QUAD_MAX_LEVEL = 14         # enough for poles within ~1e-4 of the real line
SEAM_TOL = 1e-8

# mode sum
MODE_SUM_START = 32
MODE_SUM_CAP = 2 ** 14
MODE_SUM_TOL = 1e-10

# finite differences
FD_STEP = 1e-4

TWO_PI = 2.0 * math.pi
