# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, Sequence, Tuple

ExponentVec = Tuple[int, ...]


def total_degree(alpha: Sequence[int]) -> int:
    return int(sum(alpha))


def grlex_key(alpha: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    Sort key of the graded lexicographic order: lower total degree first, then
    the larger power of the first (most significant) variable first.
    """
    return total_degree(alpha), tuple(-a for a in alpha)


def add_exponents(alpha: Sequence[int], beta: Sequence[int]) -> ExponentVec:
    return tuple(a + b for a, b in zip(alpha, beta))


def zero_exponent(nvars: int) -> ExponentVec:
    return (0,) * nvars


def unit_exponent(nvars: int, i: int, power: int = 1) -> ExponentVec:
    return tuple(power if j == i else 0 for j in range(nvars))


def _of_degree(nvars: int, degree: int) -> Iterator[ExponentVec]:
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _of_degree(nvars - 1, degree - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int) -> Tuple[ExponentVec, ...]:
    """All exponents of exactly the given total degree, in graded lex order"""
    return tuple(_of_degree(nvars, degree))


@lru_cache(maxsize=None)
def monomials_up_to(nvars: int, degree: int) -> Tuple[ExponentVec, ...]:
    """All exponents with total degree at most 'degree', in graded lex order"""
    out: Tuple[ExponentVec, ...] = ()
    for d in range(degree + 1):
        out += monomials_of_degree(nvars, d)
    return out


def basis_size(nvars: int, degree: int) -> int:
    """s(k) = C(n + k, n)"""
    return comb(nvars + degree, nvars)


def half_degree(degree: int) -> int:
    """ceil(degree / 2)"""
    return (degree + 1) // 2
