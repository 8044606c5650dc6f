#!/usr/bin/env python3

# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #

import sys

from lsipp.main import main

if __name__ == "__main__":
    sys.exit(main())
