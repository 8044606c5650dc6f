# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from pathlib import Path
from typing import Any, Callable, Dict, List, TypeVar, Union, cast

from lsipp.core.config_parser.constants import (
    BOOLEAN_STATES,
    EMPTY_LINE_RE,
    LINE_COMMENT_RE,
    OPTION_BLOCK_LINE_RE,
    OPTION_RE,
    OPTIONS_BLOCK_START_RE,
    SECTION_RE,
)
from lsipp.core.errors import LsippError

T = TypeVar("T")
Value = Union[str, List[str]]

_UNSET: Any = object()


class ConfigError(LsippError):
    """Base class of the settings file errors"""


class NoSectionError(ConfigError):
    def __init__(self, section: str):
        super().__init__(f"Section '{section}' is not defined")
        self.section = section


class NoOptionError(ConfigError):
    def __init__(self, option: str, section: str):
        super().__init__(f"Option '{option}' in section '{section}' is not defined")
        self.option = option
        self.section = section


class DuplicateSectionError(ConfigError):
    def __init__(self, section: str, where: str):
        super().__init__(f"{where}: section '{section}' is defined more than once")
        self.section = section


class UnknownLineError(ConfigError):
    def __init__(self, line: str, where: str, reason: str = "unknown line"):
        super().__init__(f"{where}: {reason}: '{line}'")
        self.line = line


def _joined(value: Value) -> str:
    if isinstance(value, list):
        return " ".join(value)
    return value.strip()


def _to_bool(text: str) -> bool:
    try:
        return BOOLEAN_STATES[text.lower()]
    except KeyError:
        raise ValueError(f"Not a boolean: {text}") from None


class SimpleConfigParser:
    """
    Read-only parser of the settings files. Options are 'name: value' or
    'name = value' lines below a '[section]' header, an option without a value
    takes the indented lines that follow it. Errors name file and line.
    """

    def __init__(self) -> None:
        self.config: Dict[str, Dict[str, Value]] = {}
        self._section: str | None = None
        self._block: str | None = None
        self._source = "<string>"
        self._lineno = 0

    @property
    def _where(self) -> str:
        return f"{self._source}:{self._lineno}"

    def _options(self, line: str) -> Dict[str, Value]:
        if self._section is None:
            raise UnknownLineError(line, self._where, "option outside of a section")
        return self.config[self._section]

    def _parse_line(self, line: str) -> None:
        line = line.rstrip("\n")
        self._lineno += 1

        if EMPTY_LINE_RE.match(line) or LINE_COMMENT_RE.match(line):
            # blank lines and comments end a multi-line option
            self._block = None
            return

        header = SECTION_RE.match(line)
        if header is not None:
            name = header.group(1)
            if name in self.config:
                raise DuplicateSectionError(name, self._where)
            self.config[name] = {}
            self._section, self._block = name, None
            return

        if self._block is not None:
            continued = OPTION_BLOCK_LINE_RE.match(line)
            if continued is not None:
                cast(List[str], self._options(line)[self._block]).append(continued.group(1))
                return
            self._block = None

        option = OPTION_RE.match(line)
        if option is not None:
            self._options(line)[option.group(1)] = option.group(2)
            return

        block = OPTIONS_BLOCK_START_RE.match(line)
        if block is not None:
            self._options(line)[block.group(1)] = []
            self._block = block.group(1)
            return

        raise UnknownLineError(line, self._where)

    def read_file(self, file: Path) -> None:
        """Read and parse a config file"""
        self._source, self._lineno = str(file), 0
        with open(file, "r", encoding="utf-8") as f:
            for line in f:
                self._parse_line(line)

    def read_string(self, text: str, source: str = "<string>") -> None:
        self._source, self._lineno = source, 0
        for line in text.splitlines():
            self._parse_line(line)

    def get_sections(self) -> List[str]:
        return list(self.config)

    def has_section(self, section: str) -> bool:
        return section in self.config

    def get_options(self, section: str) -> List[str]:
        return list(self.config.get(section, {}))

    def has_option(self, section: str, option: str) -> bool:
        return option in self.config.get(section, {})

    def _get(self, section: str, option: str, conv: Callable[[Value], T], fallback: Any) -> T:
        if section not in self.config:
            error: ConfigError = NoSectionError(section)
        elif option not in self.config[section]:
            error = NoOptionError(option, section)
        else:
            # conversion errors are not covered by the fallback
            return conv(self.config[section][option])
        if fallback is _UNSET:
            raise error
        return fallback

    def getval(self, section: str, option: str, fallback: Any = _UNSET) -> str:
        """
        Return the value of the given option in the given section, the lines
        of a multi-line option joined by a space. If the option is missing and
        'fallback' is provided, it is returned instead.
        """
        return self._get(section, option, _joined, fallback)

    def getint(self, section: str, option: str, fallback: Any = _UNSET) -> int:
        return self._get(section, option, lambda v: int(_joined(v)), fallback)

    def getfloat(self, section: str, option: str, fallback: Any = _UNSET) -> float:
        return self._get(section, option, lambda v: float(_joined(v)), fallback)

    def getboolean(self, section: str, option: str, fallback: Any = _UNSET) -> bool:
        return self._get(section, option, lambda v: _to_bool(_joined(v)), fallback)
