# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import numpy as np

from lsipp.components.polyring.exponents import (
    ExponentVec,
    add_exponents,
    grlex_key,
    total_degree,
    unit_exponent,
    zero_exponent,
)
from lsipp.core.constants import COEF_EPS, VAR_PREFIX
from lsipp.core.errors import DegreeError, DimensionMismatchError

Scalar = Union[int, float]


def _canonical(terms: Iterable[Tuple[ExponentVec, float]]) -> Dict[ExponentVec, float]:
    out: Dict[ExponentVec, float] = {}
    for exp, coef in terms:
        out[exp] = out.get(exp, 0.0) + float(coef)
    return {e: c for e, c in out.items() if abs(c) >= COEF_EPS}


class Polynomial:
    """
    Sparse real polynomial in 'nvars' variables, stored as a map from exponent
    tuples to nonzero float coefficients. Instances are immutable values.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        if nvars < 1:
            raise ValueError(f"A polynomial needs at least one variable, got {nvars}")
        self.nvars = nvars
        checked: List[Tuple[ExponentVec, float]] = []
        for exp, coef in (terms or {}).items():
            alpha = tuple(int(a) for a in exp)
            if len(alpha) != nvars:
                raise DimensionMismatchError(nvars, len(alpha), "exponent")
            if any(a < 0 for a in alpha):
                raise ValueError(f"Negative exponent in {alpha}")
            checked.append((alpha, float(coef)))
        self._terms = _canonical(checked)
        self._hash: int | None = None

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Polynomial":
        return cls(nvars, {zero_exponent(nvars): value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The polynomial Y_{index+1}, i.e. 'index' is zero based"""
        if not 0 <= index < nvars:
            raise DimensionMismatchError(nvars, index + 1, "variable index")
        return cls(nvars, {unit_exponent(nvars, index): 1.0})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: Scalar = 1.0) -> "Polynomial":
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def squared_norm(cls, nvars: int) -> "Polynomial":
        """Y1^2 + ... + Yn^2"""
        return cls(nvars, {unit_exponent(nvars, i, 2): 1.0 for i in range(nvars)})

    @property
    def terms(self) -> Dict[ExponentVec, float]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if not self._terms:
            return 0
        return max(total_degree(e) for e in self._terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({total_degree(e) for e in self._terms}) <= 1

    def coef(self, exp: Sequence[int]) -> float:
        return self._terms.get(tuple(exp), 0.0)

    def sorted_terms(self) -> List[Tuple[ExponentVec, float]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def exponent_array(self) -> np.ndarray:
        if not self._terms:
            return np.zeros((0, self.nvars), dtype=np.int64)
        return np.array([e for e, _ in self.sorted_terms()], dtype=np.int64)

    def coef_array(self) -> np.ndarray:
        return np.array([c for _, c in self.sorted_terms()], dtype=float)

    def _check_same_ring(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(self.nvars, other.nvars)

    def _lift(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_same_ring(other)
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = self._lift(other)
        result = Polynomial(self.nvars)
        result._terms = _canonical(
            list(self._terms.items()) + list(other._terms.items())
        )
        return result

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        result = Polynomial(self.nvars)
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        result = Polynomial(self.nvars)
        if not isinstance(other, Polynomial):
            result._terms = _canonical((e, c * other) for e, c in self._terms.items())
            return result
        self._check_same_ring(other)
        result._terms = _canonical(
            (add_exponents(e1, e2), c1 * c2)
            for e1, c1 in self._terms.items()
            for e2, c2 in other._terms.items()
        )
        return result

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("Polynomials only support nonnegative integer powers")
        result = Polynomial.constant(self.nvars, 1.0)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __call__(self, y: Sequence[float]) -> float:
        return self.evaluate(y)

    def evaluate(self, y: Sequence[float] | np.ndarray) -> float:
        """Sum of coef * y^alpha over the stored terms"""
        point = np.asarray(y, dtype=float)
        if point.shape != (self.nvars,):
            raise DimensionMismatchError(self.nvars, int(point.size), "point")
        if not self._terms:
            return 0.0
        powers = np.prod(np.power(point, self.exponent_array()), axis=1)
        return float(powers @ self.coef_array())

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at every row of a (N, nvars) array"""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if pts.shape[1] != self.nvars:
            raise DimensionMismatchError(self.nvars, pts.shape[1], "points")
        if not self._terms:
            return np.zeros(pts.shape[0])
        exps = self.exponent_array()
        powers = np.prod(np.power(pts[:, None, :], exps[None, :, :]), axis=2)
        return powers @ self.coef_array()

    def homogenize(self, target_degree: int) -> "Polynomial":
        """
        Lift to nvars + 1 variables with Y0 first, padding every term with
        powers of Y0 up to 'target_degree'.
        """
        if target_degree < self.degree:
            raise DegreeError("homogenization target", self.degree, target_degree)
        return Polynomial(
            self.nvars + 1,
            {
                (target_degree - total_degree(e),) + e: c
                for e, c in self._terms.items()
            },
        )

    def dehomogenize(self) -> "Polynomial":
        """Set Y0 = 1 and drop it"""
        if self.nvars < 2:
            raise DimensionMismatchError(2, self.nvars, "homogeneous polynomial")
        return Polynomial(
            self.nvars - 1, _canonical((e[1:], c) for e, c in self._terms.items())
        )

    def restrict_at_infinity(self) -> "Polynomial":
        """Set Y0 = 0 and drop it"""
        if self.nvars < 2:
            raise DimensionMismatchError(2, self.nvars, "homogeneous polynomial")
        return Polynomial(
            self.nvars - 1, {e[1:]: c for e, c in self._terms.items() if e[0] == 0}
        )

    def top_form(self, grade_degree: int | None = None) -> "Polynomial":
        """
        Homogeneous part of degree 'grade_degree', by default of the degree
        of the polynomial.
        """
        if grade_degree is None:
            if self.is_zero:
                raise DegreeError("top form of the zero polynomial", 0, -1)
            grade_degree = self.degree
        if grade_degree < self.degree:
            raise DegreeError("top form grade", self.degree, grade_degree)
        return Polynomial(
            self.nvars,
            {e: c for e, c in self._terms.items() if total_degree(e) == grade_degree},
        )

    def to_str(self, first_index: int = 1) -> str:
        """Text form like '3*Y1^2*Y2 - 1', highest degree terms first"""
        if not self._terms:
            return "0"
        parts: List[str] = []
        for exp, coef in reversed(self.sorted_terms()):
            factors = [
                f"{VAR_PREFIX}{i + first_index}" + (f"^{a}" if a > 1 else "")
                for i, a in enumerate(exp)
                if a > 0
            ]
            magnitude = abs(coef)
            if not factors:
                body = f"{magnitude:.12g}"
            elif magnitude == 1.0:
                body = "*".join(factors)
            else:
                body = f"{magnitude:.12g}*" + "*".join(factors)
            sign = "-" if coef < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial(nvars={self.nvars}, '{self.to_str()}')"


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def evaluate(p: Polynomial, y: Sequence[float] | np.ndarray) -> float:
    return p.evaluate(y)


def homogenize(p: Polynomial, target_degree: int) -> Polynomial:
    return p.homogenize(target_degree)


def top_form(p: Polynomial, grade_degree: int | None = None) -> Polynomial:
    return p.top_form(grade_degree)
