# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations


class LsippError(Exception):
    """Base class of every error raised on purpose by the toolkit"""


class DimensionMismatchError(LsippError):
    """Raised when two objects do not live in the same number of variables"""

    def __init__(self, expected: int, got: int, what: str = "polynomial"):
        msg = f"Dimension mismatch for {what}: expected {expected} variables, got {got}"
        super().__init__(msg)
        self.expected = expected
        self.got = got


class DegreeError(LsippError):
    """Raised when a degree or order pre-condition is violated"""

    def __init__(self, what: str, degree: int, limit: int):
        msg = f"{what}: degree {degree} violates the limit {limit}"
        super().__init__(msg)
        self.degree = degree
        self.limit = limit


class PolynomialParseError(LsippError):
    """Raised when the text form of a polynomial cannot be parsed"""

    def __init__(self, text: str, position: int, reason: str):
        pointer = " " * position + "^"
        msg = f"Cannot parse polynomial '{text}' at position {position}: {reason}\n  {text}\n  {pointer}"
        super().__init__(msg)
        self.position = position


class ProblemFileError(LsippError):
    """Raised when a problem file is malformed"""

    def __init__(self, path: str, reason: str):
        msg = f"Invalid problem file at '{path}': {reason}"
        super().__init__(msg)
        self.path = path


class ExtractionError(LsippError):
    """Raised when atoms cannot be extracted from a flat moment matrix"""

    def __init__(self, reason: str):
        msg = f"Atom extraction failed: {reason}"
        super().__init__(msg)


class GeneratorError(LsippError):
    """Raised when a random instance cannot be generated"""

    def __init__(self, reason: str):
        msg = f"Instance generation failed: {reason}"
        super().__init__(msg)


class InvalidValueError(LsippError):
    """Raised when a value is invalid for an option"""

    def __init__(self, section: str, option: str, value: str):
        msg = f"Invalid value '{value}' for option '{option}' in section '{section}'"
        super().__init__(msg)


class ProblemDataError(LsippError):
    """Raised when the data of a problem is inconsistent or degenerate"""

    def __init__(self, reason: str):
        msg = f"Invalid problem data: {reason}"
        super().__init__(msg)
