# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from enum import Enum


class Style(Enum):
    """ANSI styles of the console output, one per kind of message"""

    DEBUG = "\033[90m"
    INFO = "\033[37m"
    OK = "\033[92m"
    WARN = "\033[93m"
    ERROR = "\033[91m"
    STATUS = "\033[35m"
    RESET = "\033[0m"


def styled(text: str, style: Style, enabled: bool = True) -> str:
    if not enabled:
        return text
    return f"{style.value}{text}{Style.RESET.value}"
