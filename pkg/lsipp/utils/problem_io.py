# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

from lsipp.components.polyring.poly_parser import parse_polynomial
from lsipp.components.polyring.polynomial import Polynomial
from lsipp.components.popt.popt_problem import PoptProblem
from lsipp.components.relax.lsipp_problem import LsippProblem
from lsipp.core.errors import LsippError, ProblemFileError
from lsipp.core.settings.lsipp_settings import HOMOGENIZE_MODES

KINDS = ("lsipp", "popt")
LSIPP_FIELDS = {"kind", "name", "nvars", "m", "c", "a", "b", "generators", "flags"}
POPT_FIELDS = {"kind", "name", "nvars", "objective", "generators", "flags"}
FLAG_FIELDS = {"compact", "ball", "homogenize"}
TERM_FIELDS = {"exp", "coef"}

Problem = Union[LsippProblem, PoptProblem]


@dataclass
class ProblemFile:
    kind: str
    problem: Problem
    homogenize: str = "auto"
    source: str = ""


class _Reader:
    """Walks a decoded problem document, reporting errors with their JSON path"""

    def __init__(self, source: str) -> None:
        self.source = source

    def fail(self, path: str, reason: str) -> ProblemFileError:
        return ProblemFileError(f"{self.source}:{path}", reason)

    def require(self, doc: Dict[str, Any], key: str, path: str) -> Any:
        if key not in doc:
            raise self.fail(f"{path}.{key}", "missing field")
        return doc[key]

    def check_fields(self, doc: Any, allowed: set, path: str) -> None:
        if not isinstance(doc, dict):
            raise self.fail(path, "expected an object")
        unknown = sorted(set(doc) - allowed)
        if unknown:
            raise self.fail(f"{path}.{unknown[0]}", "unknown field")

    def number(self, value: Any, path: str) -> float:
        if isinstance(value, bool):
            raise self.fail(path, "expected a number, got a boolean")
        if isinstance(value, (int, float)):
            return float(value)
        if isinstance(value, str):
            try:
                return float(Fraction(value.strip()))
            except (ValueError, ZeroDivisionError):
                raise self.fail(path, f"'{value}' is not a number")
        raise self.fail(path, "expected a number or a numeric string")

    def integer(self, value: Any, path: str, minimum: int) -> int:
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            raise self.fail(path, f"expected an integer >= {minimum}")
        return value

    def polynomial(self, value: Any, nvars: int, path: str) -> Polynomial:
        if isinstance(value, str):
            try:
                return parse_polynomial(value, nvars)
            except LsippError as e:
                raise self.fail(path, str(e))
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return Polynomial.constant(nvars, float(value))
        if not isinstance(value, list):
            raise self.fail(path, "expected a polynomial string or a list of terms")
        terms: Dict[tuple, float] = {}
        for i, term in enumerate(value):
            term_path = f"{path}[{i}]"
            self.check_fields(term, TERM_FIELDS, term_path)
            exp = self.require(term, "exp", term_path)
            if (
                not isinstance(exp, list)
                or len(exp) != nvars
                or any(isinstance(e, bool) or not isinstance(e, int) or e < 0 for e in exp)
            ):
                raise self.fail(f"{term_path}.exp", f"expected {nvars} nonnegative integers")
            coef = self.number(self.require(term, "coef", term_path), f"{term_path}.coef")
            terms[tuple(exp)] = terms.get(tuple(exp), 0.0) + coef
        return Polynomial(nvars, terms)

    def polynomials(self, value: Any, nvars: int, path: str) -> List[Polynomial]:
        if not isinstance(value, list):
            raise self.fail(path, "expected a list")
        return [self.polynomial(v, nvars, f"{path}[{i}]") for i, v in enumerate(value)]


def parse_problem(doc: Any, source: str = "<problem>") -> ProblemFile:
    reader = _Reader(source)
    if not isinstance(doc, dict):
        raise reader.fail("$", "expected an object")
    kind = doc.get("kind", "lsipp")
    if kind not in KINDS:
        raise reader.fail("$.kind", f"expected one of {', '.join(KINDS)}")
    reader.check_fields(doc, LSIPP_FIELDS if kind == "lsipp" else POPT_FIELDS, "$")

    nvars = reader.integer(reader.require(doc, "nvars", "$"), "$.nvars", 1)
    name = doc.get("name", Path(source).stem)
    if not isinstance(name, str):
        raise reader.fail("$.name", "expected a string")
    gens = reader.polynomials(doc.get("generators", []), nvars, "$.generators")

    flags = doc.get("flags", {})
    reader.check_fields(flags, FLAG_FIELDS, "$.flags")
    compact = flags.get("compact", False)
    if not isinstance(compact, bool):
        raise reader.fail("$.flags.compact", "expected a boolean")
    ball = flags.get("ball")
    if ball is not None:
        ball = reader.number(ball, "$.flags.ball")
        if ball <= 0:
            raise reader.fail("$.flags.ball", "expected a positive number")
    homogenize = flags.get("homogenize", "auto")
    if homogenize not in HOMOGENIZE_MODES:
        raise reader.fail("$.flags.homogenize", f"expected one of {', '.join(HOMOGENIZE_MODES)}")

    if kind == "popt":
        f = reader.polynomial(reader.require(doc, "objective", "$"), nvars, "$.objective")
        problem: Problem = PoptProblem(nvars, f, gens, compact=compact, ball=ball, name=name)
        return ProblemFile(kind, problem, homogenize, source)

    m = reader.integer(reader.require(doc, "m", "$"), "$.m", 1)
    c_raw = reader.require(doc, "c", "$")
    if not isinstance(c_raw, list) or len(c_raw) != m:
        raise reader.fail("$.c", f"expected a list of {m} numbers")
    c = [reader.number(v, f"$.c[{i}]") for i, v in enumerate(c_raw)]
    a = reader.polynomials(reader.require(doc, "a", "$"), nvars, "$.a")
    if len(a) != m:
        raise reader.fail("$.a", f"expected {m} polynomials, got {len(a)}")
    b = reader.polynomial(reader.require(doc, "b", "$"), nvars, "$.b")
    problem = LsippProblem(nvars, c, a, b, gens, compact=compact, ball=ball, name=name)
    return ProblemFile(kind, problem, homogenize, source)


def load_problem(path: Path | str) -> ProblemFile:
    """Read a problem file, '-' reads standard input"""
    if str(path) == "-":
        source, text = "<stdin>", sys.stdin.read()
    else:
        source = str(path)
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise ProblemFileError(source, e.strerror or str(e))
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemFileError(f"{source}:{e.lineno}:{e.colno}", e.msg)
    return parse_problem(doc, source)


def dump_polynomial(p: Polynomial) -> List[Dict[str, Any]]:
    return [{"exp": list(exp), "coef": coef} for exp, coef in p.sorted_terms()]


def dump_problem(problem: Problem, homogenize: str = "auto") -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "kind": "popt" if isinstance(problem, PoptProblem) else "lsipp",
        "name": problem.name,
        "nvars": problem.nvars,
    }
    if isinstance(problem, PoptProblem):
        doc["objective"] = dump_polynomial(problem.f)
    else:
        doc["m"] = problem.m
        doc["c"] = [float(v) for v in problem.c]
        doc["a"] = [dump_polynomial(p) for p in problem.a]
        doc["b"] = dump_polynomial(problem.b)
    doc["generators"] = [dump_polynomial(g) for g in problem.gens]
    doc["flags"] = {"compact": problem.compact, "ball": problem.ball, "homogenize": homogenize}
    return doc


def write_problem(problem: Problem, path: Path | None = None, homogenize: str = "auto") -> str:
    """Serialize a problem, to 'path' when given; the text is returned either way"""
    text = json.dumps(dump_problem(problem, homogenize), indent=2) + "\n"
    if path is not None:
        path.write_text(text)
    return text
