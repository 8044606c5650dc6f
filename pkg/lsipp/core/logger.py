# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import os
import sys
import textwrap
from enum import Enum
from typing import Dict, List, TextIO

from lsipp.core.constants import LOG_ENV_VAR
from lsipp.core.types.style import Style, styled


class LogLevel(Enum):
    DEBUG = 10
    INFO = 20
    WARN = 30
    ERROR = 40
    QUIET = 100


LEVEL_NAMES: Dict[str, LogLevel] = {
    "debug": LogLevel.DEBUG,
    "info": LogLevel.INFO,
    "warn": LogLevel.WARN,
    "warning": LogLevel.WARN,
    "error": LogLevel.ERROR,
    "quiet": LogLevel.QUIET,
    "off": LogLevel.QUIET,
}


class DialogType(Enum):
    WARNING = ("WARNING", Style.WARN, LogLevel.WARN)
    ERROR = ("ERROR", Style.ERROR, LogLevel.ERROR)

    @property
    def title(self) -> str:
        return self.value[0]

    @property
    def style(self) -> Style:
        return self.value[1]

    @property
    def level(self) -> LogLevel:
        return self.value[2]


DIALOG_WIDTH = 53


def _level_from_env() -> LogLevel:
    raw = os.environ.get(LOG_ENV_VAR, "info").strip().lower()
    return LEVEL_NAMES.get(raw, LogLevel.INFO)


class Logger:
    """
    Console logger of the toolkit. Everything goes to stderr so that stdout
    stays free for JSON output. The verbosity is taken from LSIPP_LOG.
    """

    level: LogLevel = _level_from_env()
    stream: TextIO | None = None

    @staticmethod
    def set_level(level: LogLevel | str) -> None:
        if isinstance(level, str):
            level = LEVEL_NAMES.get(level.strip().lower(), LogLevel.INFO)
        Logger.level = level

    @staticmethod
    def reload_level() -> None:
        Logger.level = _level_from_env()

    @staticmethod
    def enabled_for(level: LogLevel) -> bool:
        return level.value >= Logger.level.value

    @staticmethod
    def print_debug(msg, prefix=True, start="", end="\n") -> None:
        Logger.__emit(LogLevel.DEBUG, Style.DEBUG, "[DEBUG] " if prefix else "", start, msg, end)

    @staticmethod
    def print_info(msg, prefix=True, start="", end="\n") -> None:
        Logger.__emit(LogLevel.INFO, Style.INFO, "[INFO] " if prefix else "", start, msg, end)

    @staticmethod
    def print_ok(msg: str = "Done", prefix=True, start="", end="\n") -> None:
        Logger.__emit(LogLevel.INFO, Style.OK, "[OK] " if prefix else "", start, msg, end)

    @staticmethod
    def print_warn(msg, prefix=True, start="", end="\n") -> None:
        Logger.__emit(LogLevel.WARN, Style.WARN, "[WARN] " if prefix else "", start, msg, end)

    @staticmethod
    def print_error(msg, prefix=True, start="", end="\n") -> None:
        Logger.__emit(LogLevel.ERROR, Style.ERROR, "[ERROR] " if prefix else "", start, msg, end)

    @staticmethod
    def print_status(msg, prefix=True, start="", end="\n") -> None:
        Logger.__emit(LogLevel.INFO, Style.STATUS, "\n###### " if prefix else "", start, msg, end)

    @staticmethod
    def _out() -> TextIO:
        return Logger.stream if Logger.stream is not None else sys.stderr

    @staticmethod
    def _colored() -> bool:
        out = Logger._out()
        return hasattr(out, "isatty") and out.isatty()

    @staticmethod
    def __emit(
        level: LogLevel, style: Style, tag: str, start: str, msg: object, end: str
    ) -> None:
        if not Logger.enabled_for(level):
            return
        print(styled(f"{start}{tag}{msg}", style, Logger._colored()), end=end, file=Logger._out())

    @staticmethod
    def print_dialog(kind: DialogType, content: List[str]) -> None:
        """
        Prints a boxed dialog, used for configuration problems and for the
        outcome of batch runs.

        :param kind: The type of the dialog, sets title, style and level.
        :param content: The content of the dialog, one paragraph per entry.
        """
        if not Logger.enabled_for(kind.level):
            return
        colored = Logger._colored()
        rule = "━" * (DIALOG_WIDTH + 2)
        lines = [
            f"┏{rule}┓",
            f"┃ {'[ ' + kind.title + ' ]':^{DIALOG_WIDTH}} ┃",
            f"┠{'─' * (DIALOG_WIDTH + 2)}┨",
            *(f"┃ {line:<{DIALOG_WIDTH}} ┃" for line in Logger.wrap(content, DIALOG_WIDTH)),
            f"┗{rule}┛",
        ]
        out = Logger._out()
        for line in lines:
            print(styled(line, kind.style, colored), file=out)

    @staticmethod
    def wrap(content: List[str], width: int) -> List[str]:
        wrapper = textwrap.TextWrapper(width)
        lines: List[str] = []
        for paragraph in content:
            lines.extend(wrapper.wrap(paragraph) or [""])
        return lines
