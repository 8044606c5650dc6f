# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #

from lsipp import PROJECT_ROOT

# config files
DEFAULT_CFG = PROJECT_ROOT.joinpath("default.lsipp.cfg")
CUSTOM_CFG = PROJECT_ROOT.joinpath("lsipp.cfg")

# golden problem files
PROBLEMS_DIR = PROJECT_ROOT.joinpath("resources", "problems")

# environment
LOG_ENV_VAR = "LSIPP_LOG"

# coefficients below this magnitude are dropped after arithmetic
COEF_EPS = 1e-14

# generator feasibility filter for sampled sphere points
SPHERE_FILTER_TOL = 1e-9

# variable name prefix in the text form of polynomials
VAR_PREFIX = "Y"
